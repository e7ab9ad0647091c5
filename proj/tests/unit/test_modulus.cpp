#include "schauder/modulus.hpp"

#include "schauder/algebra.hpp"
#include "schauder/series.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>

using namespace schauder;

TEST_CASE("omega of the zero function is the identity") {
    Evaluator zero = [](double) { return 0.0; };
    auto t = omega_modulus(zero, 0.5, 10);
    CHECK(t.omega.front() == 0.0);
    for (std::size_t j = 0; j < t.omega.size(); ++j) {
        CHECK(t.omega[j] == doctest::Approx(j * t.step()).epsilon(1e-15));
    }
}

TEST_CASE("omega of |x - x0| doubles the identity inside the domain") {
    const double x0 = 0.5;
    Evaluator g = [x0](double x) { return std::abs(x - x0); };
    auto t = omega_modulus(g, x0, 12);
    CHECK(t(0.25) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.inverse(0.5) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("omega is strictly increasing with omega(0) = 0 and omega >= t") {
    SchauderSeries tak(0.0, 0.0, named_schedule("takagi"), 30);
    auto v = vanish_shift([&tak](double x) { return tak.eval(x); }, 0.5);
    auto t = omega_modulus(v.g, 0.5, 14);
    CHECK(t.omega.front() == 0.0);
    for (std::size_t j = 1; j < t.omega.size(); ++j) {
        CHECK(t.omega[j] > t.omega[j - 1]);
        CHECK(t.omega[j] >= j * t.step());
    }
}

TEST_CASE("precondition and range errors") {
    Evaluator g = [](double x) { return x; };  // g(x0) != 0
    CHECK_THROWS_AS(omega_modulus(g, 0.5, 10), std::invalid_argument);

    Evaluator zero = [](double) { return 0.0; };
    auto t = omega_modulus(zero, 0.5, 8);
    CHECK_THROWS_AS(t.inverse(10.0), std::domain_error);
    CHECK_THROWS_AS(t.inverse(-0.1), std::domain_error);
}

TEST_CASE("inverse inverts the table") {
    SchauderSeries tak(0.0, 0.0, named_schedule("takagi"), 28);
    auto v = vanish_shift([&tak](double x) { return tak.eval(x); }, 0.375);
    auto t = omega_modulus(v.g, 0.375, 12);
    testutil::Stream s(81);
    for (int k = 0; k < 200; ++k) {
        const double tt = s.uniform(0.0, t.t_max());
        CHECK(t.inverse(t(tt)) == doctest::Approx(tt).epsilon(1e-9));
    }
}

TEST_CASE("linear vanish shift yields a flat element") {
    // g(x) = x - x0 gives omega(t) = 2t, F(y) = y/2 and h = ((x-x0)/2)^2.
    const double x0 = 0.5;
    Evaluator g = [x0](double x) { return x - x0; };
    auto table = omega_modulus(g, x0, 16);
    auto h = differentiable_element(g, x0, table);
    CHECK(h(0.5) == 0.0);
    CHECK(h(0.75) == doctest::Approx(0.25 * 0.25 / 4.0).epsilon(1e-9));
    for (int m = 2; m <= 14; ++m) {
        const double q = std::abs(h(x0 + std::exp2(-m)) - h(x0)) / std::exp2(-m);
        CHECK(q <= std::exp2(-m));  // quotient ~ 2^-m / 4
    }
}

TEST_CASE("differentiable element from the takagi function") {
    SchauderSeries tak(0.0, 0.0, named_schedule("takagi"), 30);
    const double x0 = 0.5;
    auto v = vanish_shift([&tak](double x) { return tak.eval(x); }, x0);
    const int M = 18;
    auto table = omega_modulus(v.g, x0, M);
    auto h = differentiable_element(v.g, x0, table);
    CHECK(h(x0) == 0.0);
    for (int m = 2; m <= 16; ++m) {
        const double hh = std::exp2(-m);
        const double slack = 1.0 + std::exp2(m - M);
        for (double x : {x0 + hh, x0 - hh}) {
            CHECK(std::abs(h(x) - h(x0)) / hh <= hh * slack * slack);
        }
    }
    // h inherits the zero set mechanism: omega^-1(|g|) <= |x - x0| + cell
    testutil::Stream s(82);
    for (int k = 0; k < 300; ++k) {
        const std::size_t j = static_cast<std::size_t>(s.index((1 << M) + 1));
        const double x = std::ldexp(static_cast<double>(j), -M);
        const double r = table.inverse(std::abs(v.g(x)));
        CHECK(r <= std::abs(x - x0) + table.step() * (1.0 + 1e-12));
    }
}

TEST_CASE("chebyshev model interpolates smooth functions") {
    auto model = fit_chebyshev([](double y) { return std::exp(y); }, -1.0, 2.0, 24);
    for (double y : {-1.0, -0.3, 0.0, 0.7, 1.9, 2.0}) {
        CHECK(model(y) == doctest::Approx(std::exp(y)).epsilon(1e-12));
    }
    CHECK(model.degree() == 24);
}

TEST_CASE("differentiable element sits in the polynomial closure of g") {
    SchauderSeries tak(0.0, 0.0, named_schedule("takagi"), 26);
    const double x0 = 0.5;
    auto v = vanish_shift([&tak](double x) { return tak.eval(x); }, x0);
    auto table = omega_modulus(v.g, x0, 14);
    auto h = differentiable_element(v.g, x0, table);

    const double tol = 5e-3;
    const auto witness = approximate_in_polynomial_closure(v.g, table, tol, 512, 11);
    CHECK(witness.within_tolerance);
    CHECK(witness.sup_error <= tol);
    CHECK(witness.model.degree() >= 8);

    // spot check the witness against h at off-sample points
    testutil::Stream s(83);
    for (int k = 0; k < 100; ++k) {
        const double x = s.uniform(0, 1);
        CHECK(std::abs(witness.model(v.g(x)) - h(x)) <= 4.0 * tol);
    }
}
