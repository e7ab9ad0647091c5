#include "schauder/scan.hpp"

#include "schauder/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <cmath>

using namespace schauder;

TEST_CASE("linear function scans to exponent 1") {
    Evaluator f = [](double x) { return x; };
    auto r = holder_scan(f, 0.3, Side::Right, 4, 20);
    CHECK(std::abs(r.exponent_estimate - 1.0) <= 0.05);
    auto l = holder_scan(f, 0.3, Side::Left, 4, 20);
    CHECK(std::abs(l.exponent_estimate - 1.0) <= 0.05);
}

TEST_CASE("constant function flags an infinite exponent") {
    Evaluator f = [](double) { return 0.7; };
    auto r = holder_scan(f, 0.5, Side::Right, 4, 12);
    CHECK(r.infinite_flag);
}

TEST_CASE("scan range must stay inside the domain") {
    Evaluator f = [](double x) { return x; };
    CHECK_THROWS(holder_scan(f, 0.01, Side::Left, 2, 10));
    CHECK_THROWS(holder_scan(f, 0.99, Side::Right, 2, 10));
    CHECK_THROWS(derivative_scan(f, 0.01, Side::Left, 2, 10));
}

TEST_CASE("sqrt_bridge scan medians land near one half") {
    SchauderSeries f(0.0, 0.0, named_schedule("sqrt_bridge"), 40);
    testutil::Stream s(51);
    std::vector<double> es;
    for (int k = 0; k < 21; ++k) {
        const double x0 = s.uniform(0.07, 0.93);
        const Side side = s.uniform(0, 1) < 0.5 ? Side::Left : Side::Right;
        es.push_back(holder_scan([&f](double x) { return f.eval(x); }, x0, side, 6, 24).exponent_estimate);
    }
    std::sort(es.begin(), es.end());
    const double median = es[es.size() / 2];
    CHECK(median >= 0.4);
    CHECK(median <= 0.6);
}

TEST_CASE("takagi increments at dyadic points follow h log(1/h)") {
    SchauderSeries t(0.0, 0.0, named_schedule("takagi"), 40);
    for (double x0 : {0.25, 0.5, 0.375}) {
        double lo = 1e300, hi = 0.0;
        for (int m = 10; m <= 25; ++m) {
            const double h = std::exp2(-m);
            const double ratio = std::abs(t.eval(x0 + h) - t.eval(x0)) / (h * m);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        // within a factor 2 of a single constant <=> max/min <= 4
        CHECK(hi / lo <= 4.0);
        CHECK(lo > 0.0);
    }
}

TEST_CASE("derivative scan verdicts") {
    // smooth: quotients converge to the derivative
    Evaluator sq = [](double x) { return x * x; };
    auto conv = derivative_scan(sq, 0.5, Side::Right, 4, 25);
    CHECK(conv.verdict == ScanVerdict::Converges);
    CHECK(std::abs(conv.limit_estimate - 1.0) <= 1e-6);

    // takagi: no finite one-sided derivative anywhere
    SchauderSeries t(0.0, 0.0, named_schedule("takagi"), 40);
    testutil::Stream s(52);
    for (int k = 0; k < 8; ++k) {
        const double x0 = s.uniform(0.1, 0.9);
        auto d = derivative_scan([&t](double x) { return t.eval(x); }, x0, Side::Right, 4, 25);
        CHECK(d.verdict != ScanVerdict::Converges);
    }

    // the squared-distance composition has a vanishing one-sided derivative
    SchauderSeries f(0.0, 0.0, named_schedule("power", 0.75), 40);
    const double x0 = 0.3728;
    const double fx0 = f.eval(x0);
    Evaluator comp = [&f, fx0](double x) {
        const double d = f.eval(x) - fx0;
        return d * d;
    };
    auto z = derivative_scan(comp, x0, Side::Right, 4, 25);
    CHECK(z.verdict == ScanVerdict::Converges);
    CHECK(std::abs(z.limit_estimate) <= 0.01);
}

TEST_CASE("power(beta) scan median tracks beta") {
    // one beta in the unit suite; the acceptance suite sweeps all four
    SchauderSeries f(0.0, 0.0, named_schedule("power", 0.75), 40);
    testutil::Stream s(53);
    std::vector<double> es;
    for (int k = 0; k < 15; ++k) {
        const double x0 = s.uniform(0.07, 0.93);
        es.push_back(
            holder_scan([&f](double x) { return f.eval(x); }, x0, Side::Right, 6, 24).exponent_estimate);
    }
    std::sort(es.begin(), es.end());
    CHECK(std::abs(es[es.size() / 2] - 0.75) <= 0.1);
}
