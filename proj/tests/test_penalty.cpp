#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "cohort/core.hpp"
#include "cohort/penalty.hpp"

using namespace cohort;

namespace {

ScalarFn coord(std::size_t i) {
    return [i](std::span<const double> x) { return x[i]; };
}

ScalarFn constant(double v) {
    return [v](std::span<const double>) { return v; };
}

}  // namespace

TEST_CASE("violation report separates satisfied from violated constraints") {
    ConstraintSet cs;
    cs.inequalities = {constant(-1.0), constant(0.0), constant(2.5)};
    cs.equalities = {constant(0.5), constant(-1e-5), constant(1e-4)};
    std::vector<double> x{0.0};
    auto r = evaluate_violations(cs, x, 1e-4);

    CHECK(r.inequality == std::vector<double>{0.0, 0.0, 2.5});
    CHECK(r.equality == std::vector<double>{0.5, 0.0, 0.0});  // |h| == delta counts as satisfied
    CHECK(r.total == 3.0);
    CHECK(r.violated == 2);
    CHECK_FALSE(r.feasible());
}

TEST_CASE("static pseudo-objective squares inequality violations") {
    // single violated inequality: -9 + 100 * 2^2 = 391
    ViolationReport r;
    r.inequality = {2.0};
    r.violated = 1;
    CHECK(static_pseudo_objective(-9.0, r, 100.0) == 391.0);

    // two violated inequalities: 10*1 + 10*4 = 50
    ViolationReport r2;
    r2.inequality = {1.0, 2.0};
    r2.violated = 2;
    CHECK(static_pseudo_objective(0.0, r2, 10.0) == 50.0);
}

TEST_CASE("static pseudo-objective takes equality violations linearly") {
    ViolationReport r;
    r.equality = {3.0};
    r.violated = 1;
    CHECK(static_pseudo_objective(1.0, r, 10.0) == 31.0);
}

TEST_CASE("dynamic pseudo-objective scales with the attempt counter") {
    ViolationReport r;
    r.inequality = {2.0};
    r.violated = 1;
    auto p = dynamic_penalty(0.5, 2.0, 2.0);
    CHECK(dynamic_pseudo_objective(0.0, r, p, 1) == 2.0);    // (1^2*0.5)*4
    CHECK(dynamic_pseudo_objective(0.0, r, p, 10) == 200.0); // (100*0.5)*4
}

TEST_CASE("dynamic attempt factor saturates instead of overflowing") {
    ViolationReport r;
    r.inequality = {1.0};
    r.violated = 1;
    PenaltyParams p = dynamic_penalty(1.0, 400.0, 1.0);
    double q = dynamic_pseudo_objective(0.0, r, p, 1000);  // 1000^400 overflows double
    CHECK(std::isfinite(q));
    CHECK(q == kDynamicFactorCap);
}

TEST_CASE("attempt counter zero is treated as the first attempt") {
    ViolationReport r;
    r.inequality = {2.0};
    r.violated = 1;
    auto p = dynamic_penalty(0.5, 2.0, 2.0);
    CHECK(dynamic_pseudo_objective(0.0, r, p, 0) == dynamic_pseudo_objective(0.0, r, p, 1));
}

TEST_CASE("parameter validation rejects non-positive scales and exponents") {
    CHECK_THROWS_AS(validate(static_penalty(0.0)), ConfigError);
    CHECK_THROWS_AS(validate(static_penalty(-1.0)), ConfigError);
    CHECK_THROWS_AS(validate(dynamic_penalty(0.5, 0.0, 2.0)), ConfigError);
    CHECK_THROWS_AS(validate(dynamic_penalty(0.5, 2.0, -1.0)), ConfigError);
    PenaltyParams bad = static_penalty();
    bad.delta = -1e-9;
    CHECK_THROWS_AS(validate(bad), ConfigError);
    CHECK_NOTHROW(validate(static_penalty()));
    CHECK_NOTHROW(validate(dynamic_penalty()));
}

TEST_CASE("feasible points pass the raw objective through unchanged", "[property]") {
    // Constraint g(x) = x0 - 1 <= 0, h(x) = x1 (within delta). Any point with
    // x0 <= 1 and |x1| <= delta is feasible and the penalty must vanish
    // exactly, not merely approximately.
    ConstraintSet cs;
    cs.inequalities = {[](std::span<const double> x) { return x[0] - 1.0; }};
    cs.equalities = {coord(1)};
    Rng rng(12345);
    for (int kind = 0; kind < 2; ++kind) {
        PenaltyParams p = kind == 0 ? static_penalty() : dynamic_penalty();
        for (int i = 0; i < 5000; ++i) {
            std::vector<double> x{rng.uniform(-50.0, 1.0), rng.uniform(-1e-4, 1e-4)};
            double f = rng.uniform(-1e6, 1e6);
            auto r = evaluate_violations(cs, x, p.delta);
            REQUIRE(r.feasible());
            REQUIRE(pseudo_objective(f, r, p, 1 + i % 100) == f);
        }
    }
}

TEST_CASE("growing a violation never lowers the pseudo-objective", "[property]") {
    Rng rng(777);
    for (int i = 0; i < 10000; ++i) {
        ViolationReport r;
        std::size_t ni = 1 + rng.next_u64() % 3;
        std::size_t ne = rng.next_u64() % 3;
        for (std::size_t k = 0; k < ni; ++k)
            r.inequality.push_back(rng.uniform01() < 0.3 ? 0.0 : rng.uniform(1e-8, 10.0));
        for (std::size_t k = 0; k < ne; ++k)
            r.equality.push_back(rng.uniform01() < 0.3 ? 0.0 : rng.uniform(1e-8, 10.0));
        for (double v : r.inequality)
            if (v > 0.0) ++r.violated;
        for (double v : r.equality)
            if (v > 0.0) ++r.violated;

        ViolationReport grown = r;
        std::size_t pick = rng.next_u64() % (ni + ne);
        double bump = rng.uniform(1e-6, 5.0);
        double* slot = pick < ni ? &grown.inequality[pick] : &grown.equality[pick - ni];
        if (*slot == 0.0) ++grown.violated;
        *slot += bump;

        double f = rng.uniform(-100.0, 100.0);
        PenaltyParams st = static_penalty(rng.uniform(1.0, 1e4));
        REQUIRE(static_pseudo_objective(f, grown, st.S) >= static_pseudo_objective(f, r, st.S));
        PenaltyParams dy = dynamic_penalty(rng.uniform(0.1, 2.0), rng.uniform(0.5, 3.0),
                                           rng.uniform(0.5, 3.0));
        std::uint64_t q = 1 + rng.next_u64() % 50;
        REQUIRE(dynamic_pseudo_objective(f, grown, dy, q) >=
                dynamic_pseudo_objective(f, r, dy, q));
    }
}

TEST_CASE("static penalty ignores the attempt counter, dynamic escalates", "[property]") {
    Rng rng(4242);
    for (int i = 0; i < 10000; ++i) {
        ViolationReport r;
        r.inequality = {rng.uniform(1e-6, 5.0)};
        r.violated = 1;
        double f = rng.uniform(-10.0, 10.0);
        double S = rng.uniform(0.1, 100.0);
        std::uint64_t q1 = 1 + rng.next_u64() % 100;
        std::uint64_t q2 = q1 + 1 + rng.next_u64() % 100;

        PenaltyParams st = static_penalty(S);
        REQUIRE(pseudo_objective(f, r, st, q1) == pseudo_objective(f, r, st, q2));

        PenaltyParams dy = dynamic_penalty(S, 2.0, 2.0);
        REQUIRE(pseudo_objective(f, r, dy, q2) > pseudo_objective(f, r, dy, q1));
    }
}

TEST_CASE("archive prefers feasible, then raw objective, then violation") {
    BestArchive a;
    Evaluation infeasible_far{{0.0}, 5.0, 100.0, 3.0, false};
    Evaluation infeasible_near{{0.0}, 9.0, 50.0, 1.0, false};
    Evaluation feasible_poor{{0.0}, 7.0, 7.0, 0.0, true};
    Evaluation feasible_good{{0.0}, 2.0, 2.0, 0.0, true};

    a.consider(infeasible_far);
    CHECK(a.best().violation == 3.0);
    a.consider(infeasible_near);
    CHECK(a.best().violation == 1.0);
    a.consider(feasible_poor);
    CHECK(a.best().raw == 7.0);
    a.consider(infeasible_near);  // feasible entry must not be displaced
    CHECK(a.best().feasible);
    a.consider(feasible_good);
    CHECK(a.best().raw == 2.0);
}

TEST_CASE("archive breaks infeasible violation ties on raw objective") {
    BestArchive a;
    a.consider(Evaluation{{0.0}, 9.0, 9.0, 2.0, false});
    a.consider(Evaluation{{0.0}, 4.0, 4.0, 2.0, false});
    CHECK(a.best().raw == 4.0);
    BestArchive b;
    CHECK_FALSE(b.has_value());
    CHECK_THROWS_AS(b.best(), ConfigError);
}

TEST_CASE("evaluator counts evaluations and records the best point seen") {
    ConstraintSet cs;
    cs.inequalities = {[](std::span<const double> x) { return x[0] - 1.0; }};
    PenalizedEvaluator ev([](std::span<const double> x) { return x[0] * x[0]; }, cs,
                          static_penalty(10.0));
    std::vector<double> a{2.0};  // infeasible: g = 1, f = 4, q = 4 + 10*1 = 14
    auto ea = ev.evaluate(a);
    CHECK(ea.penalized == 14.0);
    CHECK_FALSE(ea.feasible);
    std::vector<double> b{0.5};  // feasible: q == f == 0.25
    auto eb = ev.evaluate(b);
    CHECK(eb.penalized == 0.25);
    CHECK(eb.feasible);
    CHECK(ev.evaluations() == 2);
    CHECK(ev.archive().best().raw == 0.25);
}

TEST_CASE("evaluator applies the current attempt to the dynamic scheme") {
    ConstraintSet cs;
    cs.inequalities = {constant(2.0)};
    PenalizedEvaluator ev(constant(0.0), cs, dynamic_penalty(0.5, 2.0, 2.0));
    std::vector<double> x{0.0};
    CHECK(ev.evaluate(x).penalized == 2.0);
    ev.set_attempt(10);
    CHECK(ev.evaluate(x).penalized == 200.0);
}

TEST_CASE("evaluator rejects non-finite inputs and outputs") {
    ConstraintSet cs;
    PenalizedEvaluator ev(constant(1.0), cs, static_penalty());
    std::vector<double> bad{std::nan("")};
    CHECK_THROWS_AS(ev.evaluate(bad), EvalError);

    PenalizedEvaluator ev2([](std::span<const double>) { return std::nan(""); }, cs,
                           static_penalty());
    std::vector<double> ok{0.0};
    CHECK_THROWS_AS(ev2.evaluate(ok), EvalError);

    ConstraintSet csbad;
    csbad.inequalities = {[](std::span<const double>) {
        return std::numeric_limits<double>::infinity();
    }};
    PenalizedEvaluator ev3(constant(0.0), csbad, static_penalty());
    CHECK_THROWS_AS(ev3.evaluate(ok), EvalError);

    CHECK_THROWS_AS(PenalizedEvaluator(ScalarFn{}, cs, static_penalty()), ConfigError);
}
