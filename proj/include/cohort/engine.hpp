#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohort/core.hpp"
#include "cohort/penalty.hpp"
#include "cohort/problem.hpp"

namespace cohort {

struct Candidate;

struct EngineConfig {
    int candidates = 5;        // cohort size C
    double reduction = 0.9;    // sampling-interval reduction factor r
    int samples = 10;          // qualities drawn per candidate per attempt t
    double epsilon = 1e-11;    // saturation tolerance
    int max_attempts = 1000;
    int max_saturations = 10;  // consecutive agreeing saturations required to stop
    std::uint64_t seed = 0;

    // Diagnostic tap: called at the end of every attempt (after any interval
    // expansion) with the attempt number and the cohort. Never touches the
    // random stream, so installing it cannot change a run's outcome.
    std::function<void(int, const std::vector<Candidate>&)> attempt_observer;
};

inline void validate(const EngineConfig& cfg) {
    if (cfg.candidates < 2) throw ConfigError("candidate count must be at least 2");
    if (!(cfg.reduction >= 0.0 && cfg.reduction <= 1.0))
        throw ConfigError("reduction factor must lie in [0, 1]");
    if (cfg.samples < 1) throw ConfigError("samples per attempt must be at least 1");
    if (!(cfg.epsilon > 0.0)) throw ConfigError("saturation tolerance must be positive");
    if (cfg.max_attempts < 1) throw ConfigError("attempt limit must be at least 1");
    if (cfg.max_saturations < 1) throw ConfigError("saturation limit must be at least 1");
}

// One cohort member: its current qualities, the box it samples from, and the
// behavior (penalized objective) those qualities produced.
struct Candidate {
    std::vector<double> x;
    Bounds intervals;
    double behavior = 0.0;
    double raw = 0.0;
    double violation = 0.0;
};

struct TraceRow {
    int attempt = 0;
    int candidate = 0;
    double f_q = 0.0;
    double f_raw = 0.0;
    double violation = 0.0;
};

struct RunRecord {
    std::string problem;
    PenaltyKind scheme = PenaltyKind::Static;
    std::uint64_t seed = 0;
    Evaluation best;            // best point seen across every evaluation
    bool converged = false;     // false = attempt cap hit first (did not converge)
    int attempts = 0;
    std::uint64_t fe = 0;
    int saturations = 0;
    std::uint64_t discarded_samples = 0;  // non-finite draws dropped during resampling
    std::vector<TraceRow> trace;          // attempts x C rows, initial cohort untraced
    double wall_ms = 0.0;
};

// Follow probabilities from behaviors (minimization). Inverse-proportional
// weights require positive behaviors, so when the minimum is non-positive the
// whole vector is shifted to put the best behavior at exactly 1; ordering is
// unchanged and better behaviors always get the larger share.
inline std::vector<double> selection_probabilities(std::span<const double> behaviors) {
    if (behaviors.size() < 2) throw ConfigError("need at least two behaviors");
    double lo = behaviors[0];
    for (std::size_t i = 0; i < behaviors.size(); ++i) {
        if (!std::isfinite(behaviors[i]))
            throw EvalError("candidate " + std::to_string(i) + " has a non-finite behavior");
        lo = std::min(lo, behaviors[i]);
    }
    double shift = lo <= 0.0 ? 1.0 - lo : 0.0;
    std::vector<double> p(behaviors.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < behaviors.size(); ++i) {
        p[i] = 1.0 / (behaviors[i] + shift);
        sum += p[i];
    }
    for (double& v : p) v /= sum;
    return p;
}

// Single uniform draw against the cumulative distribution.
inline std::size_t follow_roulette(std::span<const double> p, Rng& rng) {
    if (p.empty()) throw ConfigError("empty probability vector");
    double u = rng.uniform01();
    double cum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        cum += p[i];
        if (u < cum) return i;
    }
    return p.size() - 1;  // guards rounding shortfall in the running sum
}

// Contract every dimension around the followed qualities: the new box is
// centered on the followed value with half-width (w_i / 2) * r, where w_i is
// the follower's current width, then clipped to the original bounds. Width
// never grows: it is at most r * w_i.
inline Bounds shrink_intervals(std::span<const double> followed_x,
                               std::span<const double> current_widths, double r,
                               const Bounds& original) {
    if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("reduction factor must lie in [0, 1]");
    Bounds out(original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        double half = current_widths[i] / 2.0 * r;
        out[i].lo = std::max(original[i].lo, followed_x[i] - half);
        out[i].hi = std::min(original[i].hi, followed_x[i] + half);
        if (out[i].lo > out[i].hi) out[i].lo = out[i].hi = original[i].clamp(followed_x[i]);
    }
    return out;
}

// Saturation bookkeeping: the cohort saturates when neither the best nor the
// worst behavior moved more than epsilon since the previous attempt and the
// spread inside the attempt is itself within epsilon.
struct SaturationState {
    bool has_prev = false;
    double prev_max = 0.0;
    double prev_min = 0.0;
    int saturation_count = 0;
};

inline bool check_saturation(SaturationState& st, std::span<const double> behaviors,
                             double epsilon) {
    double mx = behaviors[0], mn = behaviors[0];
    for (double b : behaviors) {
        mx = std::max(mx, b);
        mn = std::min(mn, b);
    }
    bool saturated = false;
    if (st.has_prev) {
        saturated = std::fabs(mx - st.prev_max) <= epsilon &&
                    std::fabs(mn - st.prev_min) <= epsilon && std::fabs(mx - mn) <= epsilon;
    }
    st.has_prev = true;
    st.prev_max = mx;
    st.prev_min = mn;
    if (saturated) ++st.saturation_count;
    return saturated;
}

namespace detail {

inline Candidate evaluate_candidate(PenalizedEvaluator& ev, std::vector<double> x,
                                    Bounds intervals) {
    Evaluation e = ev.evaluate(x);
    Candidate c;
    c.x = std::move(x);
    c.intervals = std::move(intervals);
    c.behavior = e.penalized;
    c.raw = e.raw;
    c.violation = e.violation;
    return c;
}

}  // namespace detail

// Initial cohort: qualities uniform over the original bounds, sampling
// intervals equal to those bounds. Consumes exactly C evaluations.
inline std::vector<Candidate> init_cohort(const ProblemSpec& spec, const EngineConfig& cfg,
                                          PenalizedEvaluator& ev, Rng& rng) {
    std::vector<Candidate> cohort;
    cohort.reserve(static_cast<std::size_t>(cfg.candidates));
    for (int c = 0; c < cfg.candidates; ++c) {
        std::vector<double> x(spec.dimension());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(spec.bounds[i]);
        cohort.push_back(detail::evaluate_candidate(ev, std::move(x), spec.bounds));
    }
    return cohort;
}

// Draw t quality vectors from the candidate's intervals and adopt the best
// (lowest penalized) one. Samples that evaluate non-finite are dropped;
// discarded counts how many. Throws when every sample was dropped.
inline void resample_and_select(Candidate& cand, int t, PenalizedEvaluator& ev, Rng& rng,
                                std::uint64_t& discarded) {
    bool have = false;
    Evaluation best;
    std::vector<double> x(cand.x.size());
    for (int j = 0; j < t; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(cand.intervals[i]);
        try {
            Evaluation e = ev.evaluate(x);
            if (!have || e.penalized < best.penalized) {
                best = std::move(e);
                have = true;
            }
        } catch (const EvalError&) {
            ++discarded;
        }
    }
    if (!have) throw EvalError("every sampled point evaluated non-finite");
    cand.x = best.x;
    cand.behavior = best.penalized;
    cand.raw = best.raw;
    cand.violation = best.violation;
}

// Full learning loop. Deterministic for a fixed seed: identical inputs give a
// bit-identical record apart from the wall-clock field.
inline RunRecord run(const ProblemSpec& spec, const PenaltyParams& scheme,
                     const EngineConfig& cfg) {
    validate(spec);
    validate(cfg);
    validate(scheme);
    auto t0 = std::chrono::steady_clock::now();

    PenalizedEvaluator ev(spec.objective, spec.constraints, scheme);
    Rng rng(cfg.seed);

    RunRecord rec;
    rec.problem = spec.name;
    rec.scheme = scheme.kind;
    rec.seed = cfg.seed;
    rec.trace.reserve(static_cast<std::size_t>(cfg.max_attempts) *
                      static_cast<std::size_t>(cfg.candidates));

    ev.set_attempt(1);
    std::vector<Candidate> cohort = init_cohort(spec, cfg, ev, rng);

    SaturationState sat;
    // Convergence requires max_saturations consecutive saturation events whose
    // best-so-far (feasibility class and value) agrees within epsilon.
    int agree_streak = 0;
    bool prev_metric_known = false;
    bool prev_feasible = false;
    double prev_value = 0.0;

    std::vector<double> behaviors(static_cast<std::size_t>(cfg.candidates));
    std::vector<std::vector<double>> followed_x(static_cast<std::size_t>(cfg.candidates));

    int attempts = 0;
    for (int l = 1; l <= cfg.max_attempts; ++l) {
        attempts = l;
        ev.set_attempt(static_cast<std::uint64_t>(l));

        for (int c = 0; c < cfg.candidates; ++c)
            behaviors[static_cast<std::size_t>(c)] = cohort[static_cast<std::size_t>(c)].behavior;
        std::vector<double> p = selection_probabilities(behaviors);

        // Following decisions use the cohort as it stood at the start of the
        // attempt, so update order cannot leak into the selection.
        for (int c = 0; c < cfg.candidates; ++c) {
            std::size_t idx = follow_roulette(p, rng);
            followed_x[static_cast<std::size_t>(c)] = cohort[idx].x;
        }
        for (int c = 0; c < cfg.candidates; ++c) {
            Candidate& cand = cohort[static_cast<std::size_t>(c)];
            std::vector<double> widths(cand.intervals.size());
            for (std::size_t i = 0; i < widths.size(); ++i)
                widths[i] = cand.intervals[i].width();
            cand.intervals = shrink_intervals(followed_x[static_cast<std::size_t>(c)], widths,
                                              cfg.reduction, spec.bounds);
            resample_and_select(cand, cfg.samples, ev, rng, rec.discarded_samples);
            rec.trace.push_back({l, c, cand.behavior, cand.raw, cand.violation});
        }

        for (int c = 0; c < cfg.candidates; ++c)
            behaviors[static_cast<std::size_t>(c)] = cohort[static_cast<std::size_t>(c)].behavior;
        if (check_saturation(sat, behaviors, cfg.epsilon)) {
            for (auto& cand : cohort) cand.intervals = spec.bounds;
            const Evaluation& b = ev.archive().best();
            double value = b.feasible ? b.raw : b.violation;
            if (prev_metric_known && prev_feasible == b.feasible &&
                std::fabs(value - prev_value) <= cfg.epsilon)
                ++agree_streak;
            else
                agree_streak = 1;
            prev_metric_known = true;
            prev_feasible = b.feasible;
            prev_value = value;
            if (agree_streak >= cfg.max_saturations) {
                rec.converged = true;
                break;
            }
        }
    }

    rec.attempts = attempts;
    rec.saturations = sat.saturation_count;
    rec.best = ev.archive().best();
    rec.fe = ev.evaluations();
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            t0)
                      .count();
    return rec;
}

}  // namespace cohort
