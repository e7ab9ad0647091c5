#include "schauder/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>
#include <stdexcept>

using namespace schauder;

namespace {
SchauderSeries takagi(int depth = 30) {
    return SchauderSeries(0.0, 0.0, named_schedule("takagi"), depth);
}
} // namespace

TEST_CASE("point evaluations from the worked examples") {
    CHECK(takagi(10).eval(0.5) == 1.0);  // only level 0 contributes at 1/2
    CHECK(takagi(1).eval(0.5) == 1.0);

    SchauderSeries constant(0.7, 0.0, named_schedule("zero"), 5);
    CHECK(constant.eval(0.0) == 0.7);
    CHECK(constant.eval(0.37) == 0.7);
    CHECK(constant.eval(1.0) == 0.7);

    SchauderSeries nh(0.0, 0.0, named_schedule("nonhoelder"), 20);
    CHECK(nh.eval(0.5) == 1.0);  // (0+1)^-2 * peak
}

TEST_CASE("grid synthesis equals pointwise evaluation bit for bit") {
    SchauderSeries zero(0.0, 0.0, named_schedule("zero"), 3);
    CHECK(zero.eval_grid(1).values == std::vector<double>{0.0, 0.0, 0.0});

    SchauderSeries linear(0.0, 1.0, named_schedule("zero"), 3);
    CHECK(linear.eval_grid(2).values == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

    // Takagi at grid level 2: hand sum of levels 0 and 1.
    CHECK(takagi().eval_grid(2).values == std::vector<double>{0.0, 1.0, 1.0, 1.0, 0.0});

    auto t = takagi(12);
    const SampleGrid g = t.eval_grid(7);
    for (std::size_t j = 0; j < g.values.size(); ++j) {
        CHECK(g.values[j] == t.eval(g.x_of(j)));
    }
}

TEST_CASE("domain and capacity errors") {
    auto t = takagi(5);
    CHECK_THROWS_AS(t.eval(-0.01), std::domain_error);
    CHECK_THROWS_AS(t.eval(1.01), std::domain_error);
    CHECK_THROWS_AS(t.eval_grid(12, 100), std::length_error);
    CHECK_THROWS_AS(SchauderSeries(0, 0, named_schedule("takagi"), 51), std::invalid_argument);
    CHECK_THROWS_AS(SchauderSeries(0, 0, named_schedule("takagi"), -1), std::invalid_argument);
}

TEST_CASE("tail bound examples") {
    CHECK(takagi(10).tail_bound() == doctest::Approx(std::exp2(-10)).epsilon(1e-15));
    SchauderSeries z(0.3, -0.2, named_schedule("zero"), 7);
    CHECK(z.tail_bound() == 0.0);
    SchauderSeries p(0.0, 0.0, named_schedule("power", 0.5), 20);
    double acc = 0.0;
    for (int n = 21; n < 2000; ++n) acc += std::exp2(-0.5 * n);
    CHECK(p.tail_bound() == doctest::Approx(acc).epsilon(1e-12));
}

TEST_CASE("takagi self-similarity: T(x) = 2x + T(2x)/2 on the left half") {
    auto t = takagi(34);
    const double bound = 4.0 * t.tail_bound();
    testutil::Stream s(21);
    for (int k = 0; k < 300; ++k) {
        const double x = s.uniform(0.0, 0.5);
        CHECK(std::abs(t.eval(x) - (2.0 * x + 0.5 * t.eval(2.0 * x))) <= bound);
    }
    // and the mirrored branch on the right half
    for (int k = 0; k < 300; ++k) {
        const double x = s.uniform(0.5, 1.0);
        CHECK(std::abs(t.eval(x) - (2.0 * (1.0 - x) + 0.5 * t.eval(2.0 * x - 1.0))) <= bound);
    }
}

TEST_CASE("truncation Lipschitz bound") {
    testutil::Stream s(22);
    auto rows = testutil::random_table(s, 8, true);
    const double b = s.uniform(-2, 2);
    SchauderSeries f(s.uniform(-1, 1), b, CoefficientSchedule::explicit_table(rows), 8);
    double lip = std::abs(b);
    for (int n = 0; n <= 8; ++n) lip += 2.0 * std::exp2(n) * f.schedule().level_abs_max(n);
    for (int k = 0; k < 500; ++k) {
        const double x = s.uniform(0, 1), y = s.uniform(0, 1);
        CHECK(std::abs(f.eval(x) - f.eval(y)) <= lip * std::abs(x - y) + 1e-12);
    }
}

TEST_CASE("lacunary series evaluates only listed levels") {
    SchauderSeries f(0.0, 0.0, named_schedule("lacunary", 0.0, {1, 3}), 10);
    // x = 1/4: level-1 tent peaks, level-3 tent vanishes at 2/8
    CHECK(f.eval(0.25) == 0.5);
    // x = 1/16: level 1 gives 2^-1 * 2*(2/16) = 0.125; level 3 gives 2^-3 * 2*(8/16 - 0) = 0.125
    CHECK(f.eval(1.0 / 16) == doctest::Approx(0.5 * 0.25 + 0.125 * 1.0).epsilon(1e-15));
}
