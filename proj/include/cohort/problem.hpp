#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cohort/core.hpp"
#include "cohort/penalty.hpp"

namespace cohort {

enum class ObjectiveType { Linear, Quadratic, Cubic, Polynomial, Nonlinear };

inline const char* objective_type_name(ObjectiveType t) {
    switch (t) {
        case ObjectiveType::Linear: return "linear";
        case ObjectiveType::Quadratic: return "quadratic";
        case ObjectiveType::Cubic: return "cubic";
        case ObjectiveType::Polynomial: return "polynomial";
        case ObjectiveType::Nonlinear: return "nonlinear";
    }
    return "unknown";
}

// Constraint census: objective curvature class plus how many inequality and
// equality constraints are linear vs nonlinear.
struct ProblemFeatures {
    ObjectiveType type = ObjectiveType::Nonlinear;
    int linear_inequalities = 0;
    int nonlinear_inequalities = 0;
    int linear_equalities = 0;
    int nonlinear_equalities = 0;
};

struct ProblemSpec {
    std::string name;
    std::string summary;
    Bounds bounds;
    ScalarFn objective;
    ConstraintSet constraints;
    ProblemFeatures features;
    std::optional<double> known_best;
    std::vector<double> known_best_point;  // empty when no reference point is recorded

    // Suggested static-penalty scale when the module default is too weak to
    // dominate the objective's range (used unless the caller sets S itself).
    std::optional<double> penalty_scale_hint;

    std::size_t dimension() const { return bounds.size(); }
    bool has_equalities() const { return !constraints.equalities.empty(); }
};

inline void validate(const ProblemSpec& spec) {
    if (spec.name.empty()) throw ConfigError("problem name is empty");
    if (spec.bounds.empty()) throw ConfigError(spec.name + ": problem has no decision variables");
    for (const auto& iv : spec.bounds) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw ConfigError(spec.name + ": bounds must be finite");
        if (iv.lo > iv.hi) throw ConfigError(spec.name + ": bound lower end exceeds upper end");
    }
    if (!spec.objective) throw ConfigError(spec.name + ": objective function is empty");
    const auto& ft = spec.features;
    if (ft.linear_inequalities + ft.nonlinear_inequalities !=
        static_cast<int>(spec.constraints.inequalities.size()))
        throw ConfigError(spec.name + ": inequality feature counts disagree with constraint set");
    if (ft.linear_equalities + ft.nonlinear_equalities !=
        static_cast<int>(spec.constraints.equalities.size()))
        throw ConfigError(spec.name + ": equality feature counts disagree with constraint set");
    if (!spec.known_best_point.empty() && spec.known_best_point.size() != spec.bounds.size())
        throw ConfigError(spec.name + ": reference point dimension disagrees with bounds");
}

// Deep-drawing response surfaces. BHF is in kN in all three: the source data
// tables report kN and the coefficients only make sense at that scale.

inline double springback_sdm(double bhf_kn, double mu, double r_d, double r_p) {
    return 0.0488 - 0.000133 * bhf_kn - 0.0167 * mu + 0.00150 * r_d + 0.00217 * r_p;
}

inline double thinning_value(double bhf_kn, double mu, double r_d, double r_p) {
    return 1.35 - 0.0400 * bhf_kn - 0.733 * mu - 0.0300 * r_d - 0.0183 * r_p;
}

inline double thickening_value(double bhf_kn, double mu, double r_d, double r_p) {
    return 1.278 + 0.00180 * bhf_kn + 0.043 * mu - 0.0167 * r_d - 0.0000 * r_p;
}

// Geometry-side parameters of a deep-drawing setup: blank diameter d0,
// finished diameter d1, corner radius z, friction coefficient mu, sheet
// thickness s0, forming pressure p (N/mm^2).
struct DeepDrawParams {
    double d0 = 0.0;
    double d1 = 0.0;
    double z = 0.0;
    double mu = 0.0;
    double s0 = 0.0;
    double p = 2.5;
};

inline void validate(const DeepDrawParams& p) {
    if (!(p.d0 > 0.0) || !(p.d1 > 0.0) || !(p.z > 0.0) || !(p.s0 > 0.0))
        throw ConfigError("deep-draw lengths must be positive");
    if (!(p.mu > 0.0 && p.mu < 1.0)) throw ConfigError("friction coefficient must be in (0, 1)");
    if (!(p.p > 0.0)) throw ConfigError("forming pressure must be positive");
}

struct CoupledProcess {
    double bhf_kn = 0.0;  // blank holder force, kN
    double r_d = 0.0;     // die radius, mm
    Interval r_p;         // admissible punch radius range [3 R_D, 6 R_D], mm
};

// Derives the process parameters from the blank geometry. The force formula
// yields newtons; it is divided by 1000 here because every consumer (the
// response surfaces above) takes kN. No range checking happens here: an R_D
// outside a problem's bracket shows up as a constraint violation downstream.
inline CoupledProcess coupled_process_vars(const DeepDrawParams& p) {
    CoupledProcess c;
    double term = p.d0 * p.d0 + 2.0 * p.z;
    c.bhf_kn = std::numbers::pi / 4.0 * term * term * p.p / 1000.0;
    c.r_d = 0.035 * (50.0 + (p.d0 - p.d1) * std::sqrt(p.s0));
    c.r_p = Interval{3.0 * c.r_d, 6.0 * c.r_d};
    return c;
}

}  // namespace cohort
