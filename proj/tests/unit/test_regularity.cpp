#include "schauder/regularity.hpp"

#include "schauder/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>
#include <limits>

using namespace schauder;

TEST_CASE("level extremes") {
    auto e = level_extremes(named_schedule("takagi"), 5);
    for (int n = 0; n <= 5; ++n) {
        CHECK(e.delta[n] == std::exp2(-n));
        CHECK(e.Delta[n] == std::exp2(-n));
    }

    auto single = level_extremes(CoefficientSchedule::explicit_table({{-2.0}}), 0);
    CHECK(single.delta[0] == 2.0);
    CHECK(single.Delta[0] == 2.0);

    // Random bridge table: strict min < max per level with overwhelming
    // probability once a level has more than one position.
    auto b = level_extremes(bridge_schedule(1), 8);
    for (int n = 1; n <= 8; ++n) CHECK(b.delta[n] < b.Delta[n]);
}

TEST_CASE("exponent bounds closed forms") {
    auto sqrtb = exponent_bounds(level_extremes(named_schedule("sqrt_bridge"), 20));
    CHECK(std::abs(sqrtb.alpha0 - 0.5) <= 1e-12);
    CHECK(std::abs(sqrtb.alpha1 - 0.5) <= 1e-12);

    auto tak = exponent_bounds(level_extremes(named_schedule("takagi"), 20));
    CHECK(std::abs(tak.alpha0 - 1.0) <= 1e-12);
    CHECK(std::abs(tak.alpha1 - 1.0) <= 1e-12);

    // alpha0 <= alpha1 in general
    testutil::Stream s(41);
    auto rows = testutil::random_table(s, 9, true);
    auto eb = exponent_bounds(level_extremes(CoefficientSchedule::explicit_table(rows), 9));
    CHECK(eb.alpha0 <= eb.alpha1);
}

TEST_CASE("nonhoelder exponent shrinks with depth") {
    auto e32 = exponent_bounds(level_extremes(named_schedule("nonhoelder"), 32), 0.5);
    CHECK(e32.alpha1 <= 2.0 * std::log2(33.0) / 16.0);
    CHECK(e32.alpha1 < 0.7);
    auto e16 = exponent_bounds(level_extremes(named_schedule("nonhoelder"), 16), 0.5);
    CHECK(e32.alpha1 < e16.alpha1);
}

TEST_CASE("vanishing deltas flag the criterion as not applicable") {
    auto lac = level_extremes(named_schedule("lacunary", 0.0, {1, 2, 6, 24}), 24);
    auto eb = exponent_bounds(lac);
    CHECK(eb.alpha1_infinite);
    CHECK(std::isinf(eb.alpha1));
    CHECK(!eb.note.empty());
}

TEST_CASE("classification verdicts") {
    auto nh = classify(level_extremes(named_schedule("nonhoelder"), 40));
    CHECK(nh.completely_non_hoelder);
    CHECK(nh.girgensohn_no_one_sided_derivative);
    CHECK(nh.conclusive);

    auto sb = classify(level_extremes(named_schedule("sqrt_bridge"), 40));
    CHECK(!sb.completely_non_hoelder);
    CHECK(sb.alpha0 == doctest::Approx(0.5).epsilon(1e-12));
    // alpha1 = 1/2 < 1: certified nowhere one-sided differentiable through
    // the alpha = 1 probe.
    CHECK(sb.girgensohn_no_one_sided_derivative);

    auto tk = classify(level_extremes(named_schedule("takagi"), 40));
    CHECK(!tk.completely_non_hoelder);
    CHECK(!tk.girgensohn_no_one_sided_derivative);  // 2^n delta_n = 1: inconclusive

    auto pw = classify(level_extremes(named_schedule("power", 0.3), 40));
    CHECK(!pw.completely_non_hoelder);

    auto zero = classify(level_extremes(named_schedule("zero"), 40));
    CHECK(!zero.completely_non_hoelder);
    CHECK(!zero.girgensohn_no_one_sided_derivative);

    auto shallow = classify(level_extremes(named_schedule("nonhoelder"), 10));
    CHECK(!shallow.conclusive);
}

TEST_CASE("probe growth ratios at depth 40 for the (n+1)^-2 schedule") {
    // Windowed limsup surrogate: max over [d/2, d] of 2^(alpha n) delta_n.
    auto e = level_extremes(named_schedule("nonhoelder"), 40);
    CHECK(probe_growth_ratio(e, 0.2) == doctest::Approx(4.1975).epsilon(1e-3));
    CHECK(probe_growth_ratio(e, 0.1) == doctest::Approx(0.5758).epsilon(1e-3));
    CHECK(probe_growth_ratio(e, 1.0) > 1e4);
}

TEST_CASE("branch criterion") {
    // Hand recursion: V(0,0) = max(1, min(0, 2)) = 1 at alpha = 0.
    auto t = CoefficientSchedule::explicit_table({{1.0}, {0.0, 2.0}});
    CHECK(branch_criterion(t, 1, 0.0) == 1.0);

    // Per-level schedules: every branch is identical, so the value is
    // max_n 2^(alpha n) c(n).
    const double alpha = 0.6;
    double expect = 0.0;
    for (int n = 0; n <= 12; ++n) expect = std::max(expect, std::exp2(alpha * n) * std::exp2(-n));
    CHECK(branch_criterion(named_schedule("takagi"), 12, alpha) == doctest::Approx(expect).epsilon(1e-15));

    // Monte Carlo growth with depth for a bridge sample at alpha = 0.6.
    const double v8 = branch_criterion(bridge_schedule(7), 8, 0.6);
    const double v16 = branch_criterion(bridge_schedule(7), 16, 0.6);
    CHECK(v16 > v8);
}

TEST_CASE("branch criterion equals a brute force branch walk on small trees") {
    testutil::Stream s(42);
    for (int rep = 0; rep < 10; ++rep) {
        const int depth = 2 + static_cast<int>(s.index(5));
        auto rows = testutil::random_table(s, depth, true);
        auto sched = CoefficientSchedule::explicit_table(rows);
        const double alpha = s.uniform(0.0, 1.0);
        // enumerate all branches (i_n) with i_{n+1} in {2 i_n, 2 i_n + 1}
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t leaf = 0; leaf < positions_at_level(depth); ++leaf) {
            double branch_max = 0.0;
            for (int n = 0; n <= depth; ++n) {
                const std::int64_t i = leaf >> (depth - n);
                branch_max = std::max(branch_max, std::exp2(alpha * n) * std::abs(rows[n][i]));
            }
            best = std::min(best, branch_max);
        }
        CHECK(branch_criterion(sched, depth, alpha) == doctest::Approx(best).epsilon(1e-14));
    }
}

TEST_CASE("three point lower bound from the second difference") {
    // For any table, any x0 and any level, the cell's corner/midpoint
    // probes oscillate by at least half the coefficient:
    // max |f(p) - f(x0)| >= (C/2) min |p - x0|^alpha with C = 2^(alpha n) gamma.
    testutil::Stream s(43);
    int checked = 0;
    for (int rep = 0; rep < 400; ++rep) {
        const int depth = 1 + static_cast<int>(s.index(12));
        auto rows = testutil::random_table(s, depth, true);
        SchauderSeries f(s.uniform(-1, 1), s.uniform(-2, 2),
                         CoefficientSchedule::explicit_table(rows), depth);
        const double x0 = s.uniform(0, 1);
        const int n = static_cast<int>(s.index(depth + 1));
        const double alpha = s.uniform(0.05, 1.0);
        const std::int64_t a = std::min<std::int64_t>(static_cast<std::int64_t>(std::ldexp(x0, n)),
                                                      positions_at_level(n) - 1);
        const double gamma = std::abs(rows[n][a]);
        const double C = std::exp2(alpha * n) * gamma;
        const double l = std::ldexp(static_cast<double>(a), -n);
        const double m = std::ldexp(2.0 * static_cast<double>(a) + 1.0, -(n + 1));
        const double r = std::ldexp(static_cast<double>(a) + 1.0, -n);
        double lhs = 0.0, min_dist = std::numeric_limits<double>::infinity();
        for (double p : {l, m, r}) {
            if (p == x0) continue;
            lhs = std::max(lhs, std::abs(f.eval(p) - f.eval(x0)));
            min_dist = std::min(min_dist, std::abs(p - x0));
        }
        CHECK(lhs >= 0.5 * C * std::pow(min_dist, alpha) * (1.0 - 1e-12));
        ++checked;
    }
    CHECK(checked == 400);
}
