#pragma once

#include "schauder/scan.hpp"

#include <iosfwd>
#include <vector>

namespace schauder {

/// omega(t) = max{|g(x)| : |x - x0| <= t, x in [0,1]} + t, tabulated on the
/// dyadic t-grid j/2^M. Strictly increasing with omega(0) = 0 and
/// omega(t) >= t, so the inverse is well defined on [0, omega(t_max)].
struct ModulusTable {
    double x0 = 0.0;
    int grid_level = 0;          // step = 2^-grid_level
    std::vector<double> omega;   // omega[j] at t = j * step

    double step() const;
    double t_max() const;
    double operator()(double t) const;   // piecewise-linear interpolation
    /// Monotone piecewise-linear inverse; throws std::domain_error when y
    /// falls outside [0, omega(t_max)].
    double inverse(double y) const;

    /// CSV `t,omega`.
    void write_csv(std::ostream& out) const;
};

/// Build the table by a running max over samples x0 +/- k 2^-M (the window
/// is clamped to [0,1], which is where x0 near the boundary loses one
/// side). Requires |g(x0)| <= 1e-9; that value is clamped to 0 so the
/// table starts exactly at the origin.
ModulusTable omega_modulus(const Evaluator& g, double x0, int grid_level);

/// h(x) = (omega^-1(|g(x)|))^2, the element differentiable at x0:
/// omega^-1(|g(x)|) <= |x - x0| + one grid cell on all samples, so the
/// difference quotients of h at x0 collapse at rate 2^-m.
Evaluator differentiable_element(Evaluator g, double x0, ModulusTable table);

/// Chebyshev interpolant on [lo, hi], evaluated by Clenshaw recurrence
/// (numerically stable at high degree, unlike a monomial rewrite).
struct ChebyshevModel {
    double lo = -1.0;
    double hi = 1.0;
    std::vector<double> coeffs;  // c_k against T_k, c_0 already halved

    double operator()(double y) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

ChebyshevModel fit_chebyshev(const std::function<double(double)>& f, double lo, double hi,
                             int degree);

/// Witness that the differentiable element lies in the polynomial closure
/// of the algebra generated by g: a polynomial p (Chebyshev form) with
/// sup_x |p(g(x)) - h(x)| <= achieved sup_error, degree escalated until the
/// tolerance is met or max_degree is reached.
struct PolynomialClosureWitness {
    ChebyshevModel model;
    double sup_error = 0.0;
    bool within_tolerance = false;
};

PolynomialClosureWitness approximate_in_polynomial_closure(const Evaluator& g,
                                                           const ModulusTable& table, double tol,
                                                           int max_degree = 512,
                                                           int sample_level = 12);

} // namespace schauder
