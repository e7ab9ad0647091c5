#pragma once

#include "schauder/scan.hpp"
#include "schauder/series.hpp"

#include <string>
#include <vector>

namespace schauder {

/// Dense polynomial, coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> coefficients);

    double operator()(double t) const;  // Horner
    Polynomial derivative() const;
    /// Coefficients of this(other(t)), computed exactly on coefficients.
    Polynomial compose(const Polynomial& inner) const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coefficients() const { return c_; }

    /// Text format `poly: c0 c1 c2 ...`.
    static Polynomial parse(const std::string& line);
    std::string to_string() const;

private:
    std::vector<double> c_;
};

/// Truncated power series around a center, valid on [center-radius,
/// center+radius]. Construction rejects expansions whose last retained
/// term at the radius is above 1e-14 of the patch scale, so evaluation
/// error stays below truncation noise.
struct PowerSeriesPatch {
    double center = 0.0;
    double radius = 0.0;
    std::vector<double> coeffs;  // ascending powers of (y - center)

    double operator()(double y) const;
    PowerSeriesPatch derivative() const;
    bool contains(double y) const { return y >= center - radius && y <= center + radius; }

    /// exp(y) expanded at `center` to enough terms for the given radius.
    static PowerSeriesPatch exp_patch(double center, double radius);
    /// Text format `patch: y0 radius c0 c1 ...`.
    static PowerSeriesPatch parse(const std::string& line);

    void check_remainder() const;  // throws when truncation is too coarse
};

/// A list of patches queried left to right; the first containing patch
/// evaluates.
struct PatchSet {
    std::vector<PowerSeriesPatch> patches;

    double eval(double y) const;  // throws std::domain_error when uncovered
    /// Throws listing the first gap unless [lo, hi] is covered.
    void require_covers(double lo, double hi) const;
};

struct RangeEstimate {
    double lo = 0.0;
    double hi = 0.0;
};

/// Grid min/max of the series widened by its tail bound: a certified
/// enclosure of the range of the untruncated function.
RangeEstimate estimate_range(const SchauderSeries& f, int grid_level = 12);

/// Pointwise P(f(x)).
Evaluator compose_poly(Evaluator f, Polynomial P);

/// Pointwise F(f(x)); the patch set must cover the certified range of f.
Evaluator compose_analytic(const SchauderSeries& f, PatchSet F, int grid_level = 12);
Evaluator compose_analytic(Evaluator f, PatchSet F, const RangeEstimate& certified_range);

/// Pointwise f(x)^lambda. Requires a certified positive lower bound for f
/// (grid min - tail > 0); throws otherwise.
Evaluator power_family(const SchauderSeries& f, double lambda, int grid_level = 12);

struct GramResult {
    int rank = 0;
    double smallest_singular_value = 0.0;
    std::vector<double> eigenvalues;  // of the sample Gram matrix, descending
};

/// Numerical rank of the sample Gram matrix <f_j, f_k> over the dyadic
/// grid of `sample_level`, at relative tolerance `rel_tol`.
GramResult gram_independence(const std::vector<Evaluator>& fs, int sample_level, double rel_tol = 1e-8);

struct VanishShift {
    Evaluator g;            // g(x) = f(x)^2 - f(x0) f(x); g(x0) = 0
    bool non_constant = false;
    double value_at_x0 = 0.0;
};

/// The algebra element vanishing at x0 built from f; `non_constant` is
/// detected from the grid range of g.
VanishShift vanish_shift(const Evaluator& f, double x0, int grid_level = 10);

struct CriticalCompositionTest {
    double fprime_at_fx0 = 0.0;
    DerivativeScan left;
    DerivativeScan right;
    /// F'(f(x0)) = 0 (within 1e-9)  <=>  both scans converge.
    bool consistent = false;
};

/// Differentiability of F(f(.)) at x0 for f built from a schedule whose
/// alpha0 exceeds 1/2 (throws otherwise: the criterion's hypothesis).
CriticalCompositionTest critical_composition_test(const SchauderSeries& f, const Evaluator& F,
                                                  const Evaluator& Fprime, double x0, int m_min = 6,
                                                  int m_max = 25);

} // namespace schauder
