#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohort {

// Invalid parameters or malformed setup (bad bounds, C < 2, unknown flags).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An objective or constraint evaluator produced an unusable value.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unknown catalog entry.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Closed interval [lo, hi]. Degenerate (lo == hi) intervals are allowed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

using Bounds = std::vector<Interval>;

// Deterministic generator. std::mt19937_64 is fully specified by the
// standard; the [0,1) mapping is done by hand because std::uniform_real_
// distribution is not, so a fixed seed reproduces a run bit for bit on any
// conforming implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); returns lo when the interval is degenerate.
    double uniform(double lo, double hi) {
        if (lo >= hi) return lo;
        return lo + uniform01() * (hi - lo);
    }

    double uniform(const Interval& iv) { return uniform(iv.lo, iv.hi); }

private:
    std::mt19937_64 engine_;
};

// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline bool all_finite(std::span<const double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace cohort
