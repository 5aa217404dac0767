#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cohort/core.hpp"

namespace cohort {

using ScalarFn = std::function<double(std::span<const double>)>;

// Inequalities are satisfied iff g(x) <= 0; equalities iff |h(x)| <= delta.
struct ConstraintSet {
    std::vector<ScalarFn> inequalities;
    std::vector<ScalarFn> equalities;

    std::size_t size() const { return inequalities.size() + equalities.size(); }
};

// Per-constraint violation magnitudes. Inequality entries hold max(0, g);
// equality entries hold |h| when it exceeds the tolerance and 0 otherwise,
// so every nonzero entry is a genuine violation.
struct ViolationReport {
    std::vector<double> inequality;
    std::vector<double> equality;
    double total = 0.0;
    std::size_t violated = 0;

    bool feasible() const { return violated == 0; }
};

enum class PenaltyKind { Static, Dynamic };

struct PenaltyParams {
    PenaltyKind kind = PenaltyKind::Static;
    double S = 1e3;       // penalty scale
    double alpha = 2.0;   // attempt exponent (dynamic only)
    double beta = 2.0;    // violation exponent (dynamic only)
    double delta = 1e-4;  // equality satisfaction tolerance
};

inline PenaltyParams static_penalty(double S = 1e3, double delta = 1e-4) {
    PenaltyParams p;
    p.kind = PenaltyKind::Static;
    p.S = S;
    p.delta = delta;
    return p;
}

inline PenaltyParams dynamic_penalty(double S = 0.5, double alpha = 2.0, double beta = 2.0,
                                     double delta = 1e-4) {
    PenaltyParams p;
    p.kind = PenaltyKind::Dynamic;
    p.S = S;
    p.alpha = alpha;
    p.beta = beta;
    p.delta = delta;
    return p;
}

inline void validate(const PenaltyParams& p) {
    if (!(p.S > 0.0)) throw ConfigError("penalty scale S must be positive");
    if (!(p.delta >= 0.0)) throw ConfigError("equality tolerance delta must be non-negative");
    if (p.kind == PenaltyKind::Dynamic) {
        if (!(p.alpha > 0.0)) throw ConfigError("dynamic penalty exponent alpha must be positive");
        if (!(p.beta > 0.0)) throw ConfigError("dynamic penalty exponent beta must be positive");
    }
}

inline ViolationReport evaluate_violations(const ConstraintSet& cs, std::span<const double> x,
                                           double delta) {
    ViolationReport r;
    r.inequality.reserve(cs.inequalities.size());
    r.equality.reserve(cs.equalities.size());
    for (const auto& g : cs.inequalities) {
        double v = g(x);
        if (!std::isfinite(v)) throw EvalError("inequality constraint returned a non-finite value");
        double viol = v > 0.0 ? v : 0.0;
        r.inequality.push_back(viol);
        if (viol > 0.0) {
            r.total += viol;
            ++r.violated;
        }
    }
    for (const auto& h : cs.equalities) {
        double v = h(x);
        if (!std::isfinite(v)) throw EvalError("equality constraint returned a non-finite value");
        double mag = std::fabs(v);
        double viol = mag > delta ? mag : 0.0;
        r.equality.push_back(viol);
        if (viol > 0.0) {
            r.total += viol;
            ++r.violated;
        }
    }
    return r;
}

// f + S * sum g_i^2 over violated inequalities + S * sum |h_j| over violated
// equalities. Feasible points pick up no terms, so the raw objective passes
// through unchanged.
inline double static_pseudo_objective(double f, const ViolationReport& r, double S) {
    double q = f;
    for (double v : r.inequality)
        if (v > 0.0) q += S * v * v;
    for (double v : r.equality)
        if (v > 0.0) q += S * v;
    return q;
}

// Attempt-dependent factor cap. pow(attempt, alpha) can overflow double for
// large exponents; escalation beyond this point no longer changes which
// candidate wins a comparison, so the factor saturates instead of erroring.
inline constexpr double kDynamicFactorCap = 1e15;

// f + (q^alpha * S) * sum viol_k^beta over violated constraints, where q is
// the 1-based attempt counter. Penalty pressure grows as the run ages.
inline double dynamic_pseudo_objective(double f, const ViolationReport& r,
                                       const PenaltyParams& p, std::uint64_t attempt) {
    if (attempt == 0) attempt = 1;
    double factor = std::pow(static_cast<double>(attempt), p.alpha) * p.S;
    if (!(factor < kDynamicFactorCap)) factor = kDynamicFactorCap;
    double q = f;
    for (double v : r.inequality)
        if (v > 0.0) q += factor * std::pow(v, p.beta);
    for (double v : r.equality)
        if (v > 0.0) q += factor * std::pow(v, p.beta);
    return q;
}

inline double pseudo_objective(double f, const ViolationReport& r, const PenaltyParams& p,
                               std::uint64_t attempt) {
    return p.kind == PenaltyKind::Static ? static_pseudo_objective(f, r, p.S)
                                         : dynamic_pseudo_objective(f, r, p, attempt);
}

// One evaluated point.
struct Evaluation {
    std::vector<double> x;
    double raw = 0.0;        // objective before any penalty
    double penalized = 0.0;  // pseudo-objective actually minimized
    double violation = 0.0;  // total constraint violation
    bool feasible = false;
};

// Best point seen across every evaluation of a run, independent of which
// candidate produced it. Feasible beats infeasible; among feasible, lower raw
// objective wins; among infeasible, lower total violation wins with raw
// objective as the tiebreak.
class BestArchive {
public:
    void consider(const Evaluation& e) {
        if (!best_) {
            best_ = e;
            return;
        }
        if (better(e, *best_)) best_ = e;
    }

    bool has_value() const { return best_.has_value(); }
    const Evaluation& best() const {
        if (!best_) throw ConfigError("archive is empty: nothing was evaluated");
        return *best_;
    }

    static bool better(const Evaluation& a, const Evaluation& b) {
        if (a.feasible != b.feasible) return a.feasible;
        if (a.feasible) return a.raw < b.raw;
        if (a.violation != b.violation) return a.violation < b.violation;
        return a.raw < b.raw;
    }

private:
    std::optional<Evaluation> best_;
};

// Couples an objective and its constraints with a penalty scheme. Counts
// function evaluations, carries the attempt counter the dynamic scheme needs,
// and feeds every point into the archive.
class PenalizedEvaluator {
public:
    PenalizedEvaluator(ScalarFn objective, ConstraintSet constraints, PenaltyParams params)
        : objective_(std::move(objective)),
          constraints_(std::move(constraints)),
          params_(params) {
        validate(params_);
        if (!objective_) throw ConfigError("objective function is empty");
    }

    Evaluation evaluate(std::span<const double> x) {
        if (!all_finite(x)) throw EvalError("evaluation point contains a non-finite coordinate");
        ++evaluations_;
        double f = objective_(x);
        if (!std::isfinite(f)) throw EvalError("objective returned a non-finite value");
        ViolationReport r = evaluate_violations(constraints_, x, params_.delta);
        Evaluation e;
        e.x.assign(x.begin(), x.end());
        e.raw = f;
        e.penalized = pseudo_objective(f, r, params_, attempt_);
        e.violation = r.total;
        e.feasible = r.feasible();
        archive_.consider(e);
        return e;
    }

    void set_attempt(std::uint64_t attempt) { attempt_ = attempt; }
    std::uint64_t attempt() const { return attempt_; }

    std::uint64_t evaluations() const { return evaluations_; }
    const BestArchive& archive() const { return archive_; }
    const PenaltyParams& params() const { return params_; }
    const ConstraintSet& constraints() const { return constraints_; }

private:
    ScalarFn objective_;
    ConstraintSet constraints_;
    PenaltyParams params_;
    std::uint64_t attempt_ = 1;
    std::uint64_t evaluations_ = 0;
    BestArchive archive_;
};

}  // namespace cohort
