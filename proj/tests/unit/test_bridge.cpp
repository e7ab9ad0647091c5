#include "schauder/bridge.hpp"

#include "schauder/analysis.hpp"
#include "schauder/rng.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>

using namespace schauder;

TEST_CASE("bridge endpoints vanish exactly") {
    for (std::uint64_t seed : {1ull, 42ull, 987654321ull}) {
        auto b = bridge_sample(20, seed);
        CHECK(b.series.eval(0.0) == 0.0);
        CHECK(b.series.eval(1.0) == 0.0);
    }
}

TEST_CASE("bridge is deterministic in the seed") {
    auto a = bridge_sample(16, 7);
    auto b = bridge_sample(16, 7);
    auto c = bridge_sample(16, 8);
    testutil::Stream s(101);
    bool differs = false;
    for (int k = 0; k < 50; ++k) {
        const double x = s.uniform(0, 1);
        CHECK(a.series.eval(x) == b.series.eval(x));
        if (a.series.eval(x) != c.series.eval(x)) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("value at one half is the root coefficient") {
    // All tents above level 0 vanish at 1/2, so B(1/2) = xi_{0,0}.
    auto b = bridge_sample(20, 31337);
    CHECK(b.series.eval(0.5) == rng::normal(31337, 0, 0));
}

TEST_CASE("sample variance of B(1/2) is near 1") {
    // 2000 seeds in the unit suite; the acceptance suite runs 10^4.
    const int count = 2000;
    double sum = 0.0, sumsq = 0.0;
    for (int seed = 0; seed < count; ++seed) {
        const double v = rng::normal(static_cast<std::uint64_t>(seed), 0, 0);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / count;
    const double var = (sumsq - count * mean * mean) / (count - 1);
    CHECK(std::abs(var - 1.0) <= 0.12);  // ~3.8 sigma of the chi^2 fluctuation
}

TEST_CASE("analysis recovers the bridge coefficients") {
    auto b = bridge_sample(20, 5);
    const auto got = analyze(b.series.eval_grid(8));
    CHECK(std::abs(got.a) <= 1e-12);
    CHECK(std::abs(got.b) <= 1e-12);
    for (int n = 0; n < 8; ++n) {
        for (std::int64_t i = 0; i < positions_at_level(n); ++i) {
            const double expect = std::exp2(-0.5 * n) * rng::normal(5, n, i);
            CHECK(std::abs(got.table.gamma(n, i) - expect) <= 1e-12);
        }
    }
}

TEST_CASE("distinct coefficients are numerically uncorrelated") {
    const int seeds = 4000;
    testutil::Stream s(102);
    for (int pair = 0; pair < 12; ++pair) {
        const int n1 = static_cast<int>(s.index(6));
        const int n2 = 1 + static_cast<int>(s.index(5));  // level >= 1: a distinct index exists
        const std::int64_t i1 = s.index(positions_at_level(n1));
        std::int64_t i2 = s.index(positions_at_level(n2));
        if (n1 == n2 && i1 == i2) i2 = (i2 + 1) % positions_at_level(n2);
        double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
        for (int seed = 0; seed < seeds; ++seed) {
            const double x = rng::normal(static_cast<std::uint64_t>(seed), n1, i1);
            const double y = rng::normal(static_cast<std::uint64_t>(seed), n2, i2);
            sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
        }
        const double corr = (seeds * sxy - sx * sy) /
                            std::sqrt((seeds * sxx - sx * sx) * (seeds * syy - sy * sy));
        CHECK(std::abs(corr) < 0.08);  // 5 sigma at 4000 samples
    }
}
