#include "schauder/modulus.hpp"

#include "schauder/io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace schauder {

double ModulusTable::step() const { return std::exp2(-grid_level); }
double ModulusTable::t_max() const { return static_cast<double>(omega.size() - 1) * step(); }

double ModulusTable::operator()(double t) const {
    if (!(t >= 0.0 && t <= t_max())) throw std::domain_error("ModulusTable: t outside [0, t_max]");
    const double pos = t / step();
    const auto j = std::min(static_cast<std::size_t>(pos), omega.size() - 2);
    const double frac = pos - static_cast<double>(j);
    return omega[j] + frac * (omega[j + 1] - omega[j]);
}

double ModulusTable::inverse(double y) const {
    if (!(y >= omega.front() && y <= omega.back())) {
        throw std::domain_error("ModulusTable::inverse: y = " + format17(y) + " outside [" +
                                format17(omega.front()) + ", " + format17(omega.back()) + "]");
    }
    const auto it = std::lower_bound(omega.begin(), omega.end(), y);
    if (it == omega.begin()) return 0.0;
    const auto j = static_cast<std::size_t>(it - omega.begin()) - 1;
    const double lo = omega[j], hi = omega[j + 1];
    const double frac = hi > lo ? (y - lo) / (hi - lo) : 0.0;
    return (static_cast<double>(j) + frac) * step();
}

void ModulusTable::write_csv(std::ostream& out) const {
    out << "t,omega\n";
    for (std::size_t j = 0; j < omega.size(); ++j) {
        out << format17(static_cast<double>(j) * step()) << ',' << format17(omega[j]) << '\n';
    }
}

ModulusTable omega_modulus(const Evaluator& g, double x0, int grid_level) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("omega_modulus: x0 outside [0,1]");
    if (grid_level < 4 || grid_level > 26) throw std::invalid_argument("omega_modulus: grid level out of range");
    const double g0 = std::abs(g(x0));
    if (g0 > 1e-9) {
        throw std::invalid_argument("omega_modulus: |g(x0)| = " + format17(g0) + " > 1e-9");
    }
    ModulusTable table;
    table.x0 = x0;
    table.grid_level = grid_level;
    const double step = std::exp2(-grid_level);
    const auto cells = static_cast<std::size_t>(std::ceil(std::max(x0, 1.0 - x0) / step));
    table.omega.resize(cells + 1);
    double run_max = 0.0;  // |g(x0)| <= 1e-9 clamped so omega(0) = 0 exactly
    table.omega[0] = 0.0;
    for (std::size_t j = 1; j <= cells; ++j) {
        const double t = static_cast<double>(j) * step;
        const double xl = x0 - t;
        const double xr = x0 + t;
        if (xl >= 0.0) run_max = std::max(run_max, std::abs(g(xl)));
        if (xr <= 1.0) run_max = std::max(run_max, std::abs(g(xr)));
        table.omega[j] = run_max + t;
    }
    return table;
}

Evaluator differentiable_element(Evaluator g, double x0, ModulusTable table) {
    if (table.omega.size() < 2) throw std::invalid_argument("differentiable_element: degenerate table");
    if (table.x0 != x0) throw std::invalid_argument("differentiable_element: table built for a different x0");
    return [g = std::move(g), table = std::move(table)](double x) {
        const double r = table.inverse(std::abs(g(x)));
        return r * r;
    };
}

double ChebyshevModel::operator()(double y) const {
    const double t = (2.0 * y - (hi + lo)) / (hi - lo);
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + coeffs[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + coeffs[0];
}

ChebyshevModel fit_chebyshev(const std::function<double(double)>& f, double lo, double hi,
                             int degree) {
    if (!(hi > lo)) throw std::invalid_argument("fit_chebyshev: empty interval");
    if (degree < 0) throw std::invalid_argument("fit_chebyshev: negative degree");
    const int nodes = degree + 1;
    std::vector<double> values(static_cast<std::size_t>(nodes));
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    constexpr double pi = 3.14159265358979323846;
    for (int j = 0; j < nodes; ++j) {
        const double theta = pi * (j + 0.5) / nodes;
        values[j] = f(mid + half * std::cos(theta));
    }
    ChebyshevModel model;
    model.lo = lo;
    model.hi = hi;
    model.coeffs.resize(static_cast<std::size_t>(nodes));
    for (int k = 0; k < nodes; ++k) {
        double acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            acc += values[j] * std::cos(pi * k * (j + 0.5) / nodes);
        }
        model.coeffs[k] = (k == 0 ? 1.0 : 2.0) * acc / nodes;
    }
    return model;
}

PolynomialClosureWitness approximate_in_polynomial_closure(const Evaluator& g,
                                                           const ModulusTable& table, double tol,
                                                           int max_degree, int sample_level) {
    // h(x) = s(g(x)) with s(y) = (omega^-1(|y|))^2, so a polynomial close to
    // s on the range of g is the witness. The square smooths the |y| kink
    // to C^1, which Chebyshev interpolation handles at modest degree.
    const std::size_t count = (std::size_t{1} << sample_level) + 1;
    std::vector<double> gv(count), hv(count);
    double lo = 1e308, hi = -1e308;
    for (std::size_t j = 0; j < count; ++j) {
        gv[j] = g(std::ldexp(static_cast<double>(j), -sample_level));
        const double r = table.inverse(std::abs(gv[j]));
        hv[j] = r * r;
        lo = std::min(lo, gv[j]);
        hi = std::max(hi, gv[j]);
    }
    if (hi <= lo) hi = lo + 1e-12;
    auto s = [&table](double y) {
        const double r = table.inverse(std::abs(y));
        return r * r;
    };
    PolynomialClosureWitness best;
    best.sup_error = 1e308;
    for (int degree = 8; degree <= max_degree; degree *= 2) {
        ChebyshevModel model = fit_chebyshev(s, lo, hi, degree);
        double err = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            err = std::max(err, std::abs(model(gv[j]) - hv[j]));
        }
        if (err < best.sup_error) {
            best.model = std::move(model);
            best.sup_error = err;
        }
        if (best.sup_error <= tol) break;
    }
    best.within_tolerance = best.sup_error <= tol;
    return best;
}

} // namespace schauder
