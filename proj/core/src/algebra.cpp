#include "schauder/algebra.hpp"

#include "schauder/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace schauder {

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("Polynomial: empty coefficient list");
    if (c_.size() > 1 && c_.back() == 0.0) {
        throw std::invalid_argument("Polynomial: zero leading coefficient");
    }
    for (double v : c_) {
        if (!std::isfinite(v)) throw std::invalid_argument("Polynomial: non-finite coefficient");
    }
}

double Polynomial::operator()(double t) const {
    double acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() == 1) return Polynomial({0.0});
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    while (d.size() > 1 && d.back() == 0.0) d.pop_back();
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    // Horner over polynomial arithmetic.
    std::vector<double> acc{0.0};
    auto mul = [](const std::vector<double>& p, const std::vector<double>& q) {
        std::vector<double> r(p.size() + q.size() - 1, 0.0);
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (std::size_t b = 0; b < q.size(); ++b) r[a + b] += p[a] * q[b];
        }
        return r;
    };
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = mul(acc, inner.c_);
        if (acc.empty()) acc = {0.0};
        acc[0] += c_[k];
    }
    while (acc.size() > 1 && acc.back() == 0.0) acc.pop_back();
    return Polynomial(std::move(acc));
}

Polynomial Polynomial::parse(const std::string& line) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag != "poly:") throw std::invalid_argument("Polynomial::parse: expected `poly: c0 c1 ...`");
    std::vector<double> c;
    double v;
    while (ss >> v) c.push_back(v);
    if (c.empty()) throw std::invalid_argument("Polynomial::parse: no coefficients");
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
    std::string s = "poly:";
    for (double v : c_) s += " " + format17(v);
    return s;
}

double PowerSeriesPatch::operator()(double y) const {
    const double t = y - center;
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

PowerSeriesPatch PowerSeriesPatch::derivative() const {
    PowerSeriesPatch d;
    d.center = center;
    d.radius = radius;
    if (coeffs.size() <= 1) {
        d.coeffs = {0.0};
        return d;
    }
    d.coeffs.resize(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        d.coeffs[k - 1] = coeffs[k] * static_cast<double>(k);
    }
    return d;
}

void PowerSeriesPatch::check_remainder() const {
    if (coeffs.empty()) throw std::invalid_argument("PowerSeriesPatch: empty expansion");
    if (!(radius > 0.0)) throw std::invalid_argument("PowerSeriesPatch: radius must be > 0");
    for (double c : coeffs) {
        if (!std::isfinite(c)) throw std::invalid_argument("PowerSeriesPatch: non-finite coefficient");
    }
    // Short coefficient lists are exact polynomials. Longer lists are read
    // as truncated expansions: the retained terms must have decayed below
    // 1e-14 of the patch scale at the radius.
    if (coeffs.size() <= 8) return;
    double scale = 0.0, rk = 1.0;
    for (double c : coeffs) {
        scale = std::max(scale, std::abs(c) * rk);
        rk *= radius;
    }
    const double last = std::abs(coeffs.back()) * std::pow(radius, static_cast<double>(coeffs.size() - 1));
    if (last > 1e-14 * std::max(scale, 1.0)) {
        throw std::invalid_argument("PowerSeriesPatch: truncation remainder above 1e-14 of scale at the radius");
    }
}

PowerSeriesPatch PowerSeriesPatch::exp_patch(double center, double radius) {
    PowerSeriesPatch p;
    p.center = center;
    p.radius = radius;
    const double e0 = std::exp(center);
    double term = e0;
    p.coeffs.push_back(term);
    // Terms of e^c r^k / k! fall below 1e-16 * e^c well before k = 200.
    for (int k = 1; k < 200; ++k) {
        term /= static_cast<double>(k);
        p.coeffs.push_back(term);
        if (term * std::pow(radius, static_cast<double>(k)) < 1e-16 * e0) break;
    }
    p.check_remainder();
    return p;
}

PowerSeriesPatch PowerSeriesPatch::parse(const std::string& line) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag != "patch:") throw std::invalid_argument("PowerSeriesPatch::parse: expected `patch: y0 radius c0 ...`");
    PowerSeriesPatch p;
    if (!(ss >> p.center >> p.radius)) {
        throw std::invalid_argument("PowerSeriesPatch::parse: missing center/radius");
    }
    double v;
    while (ss >> v) p.coeffs.push_back(v);
    p.check_remainder();
    return p;
}

double PatchSet::eval(double y) const {
    for (const auto& p : patches) {
        if (p.contains(y)) return p(y);
    }
    throw std::domain_error("PatchSet: y = " + format17(y) + " is not covered by any patch");
}

void PatchSet::require_covers(double lo, double hi) const {
    if (patches.empty()) throw std::domain_error("PatchSet: empty patch list");
    std::vector<std::pair<double, double>> iv;
    iv.reserve(patches.size());
    for (const auto& p : patches) iv.emplace_back(p.center - p.radius, p.center + p.radius);
    std::sort(iv.begin(), iv.end());
    double cover = lo;
    for (const auto& [l, r] : iv) {
        if (l > cover) break;
        cover = std::max(cover, r);
        if (cover >= hi) return;
    }
    throw std::domain_error("PatchSet: range [" + format17(lo) + ", " + format17(hi) +
                            "] not covered; gap starts at " + format17(cover));
}

RangeEstimate estimate_range(const SchauderSeries& f, int grid_level) {
    const SampleGrid g = f.eval_grid(grid_level);
    const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
    const double tail = f.tail_bound();
    return {*lo - tail, *hi + tail};
}

Evaluator compose_poly(Evaluator f, Polynomial P) {
    return [f = std::move(f), P = std::move(P)](double x) { return P(f(x)); };
}

Evaluator compose_analytic(Evaluator f, PatchSet F, const RangeEstimate& certified_range) {
    for (const auto& p : F.patches) p.check_remainder();
    F.require_covers(certified_range.lo, certified_range.hi);
    return [f = std::move(f), F = std::move(F)](double x) { return F.eval(f(x)); };
}

Evaluator compose_analytic(const SchauderSeries& f, PatchSet F, int grid_level) {
    return compose_analytic(Evaluator(f), std::move(F), estimate_range(f, grid_level));
}

Evaluator power_family(const SchauderSeries& f, double lambda, int grid_level) {
    if (!(lambda > 0.0)) throw std::invalid_argument("power_family: lambda must be > 0");
    const RangeEstimate r = estimate_range(f, grid_level);
    if (!(r.lo > 0.0)) {
        throw std::domain_error("power_family: positivity not certified (grid min - tail = " +
                                format17(r.lo) + ")");
    }
    return [f, lambda](double x) { return std::pow(f(x), lambda); };
}

namespace {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations; plenty for
// the small Gram matrices built here.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        }
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t k = 0; k < n; ++k) ev[k] = a[k][k];
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

} // namespace

GramResult gram_independence(const std::vector<Evaluator>& fs, int sample_level, double rel_tol) {
    if (fs.empty()) throw std::invalid_argument("gram_independence: empty function list");
    if (sample_level < 1 || sample_level > 24) {
        throw std::invalid_argument("gram_independence: sample level out of range");
    }
    const std::size_t count = (std::size_t{1} << sample_level) + 1;
    std::vector<std::vector<double>> samples(fs.size(), std::vector<double>(count));
    for (std::size_t j = 0; j < fs.size(); ++j) {
        for (std::size_t k = 0; k < count; ++k) {
            samples[j][k] = fs[j](std::ldexp(static_cast<double>(k), -sample_level));
        }
    }
    std::vector<std::vector<double>> gram(fs.size(), std::vector<double>(fs.size(), 0.0));
    for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = a; b < fs.size(); ++b) {
            double dot = 0.0;
            for (std::size_t k = 0; k < count; ++k) dot += samples[a][k] * samples[b][k];
            gram[a][b] = gram[b][a] = dot / static_cast<double>(count);
        }
    }
    GramResult res;
    res.eigenvalues = symmetric_eigenvalues(std::move(gram));
    const double top = res.eigenvalues.empty() ? 0.0 : std::max(res.eigenvalues.front(), 0.0);
    for (double ev : res.eigenvalues) {
        if (ev > rel_tol * top) ++res.rank;
    }
    // Eigenvalues of the Gram matrix are squared singular values of the
    // sample matrix.
    const double smallest = std::max(res.eigenvalues.back(), 0.0);
    res.smallest_singular_value = std::sqrt(smallest);
    return res;
}

VanishShift vanish_shift(const Evaluator& f, double x0, int grid_level) {
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("vanish_shift: x0 outside [0,1]");
    const double fx0 = f(x0);
    Evaluator g = [f, fx0](double x) {
        const double v = f(x);
        return v * v - fx0 * v;
    };
    VanishShift out;
    out.value_at_x0 = g(x0);
    double lo = g(0.0), hi = lo;
    const std::size_t count = (std::size_t{1} << grid_level) + 1;
    for (std::size_t k = 1; k < count; ++k) {
        const double v = g(std::ldexp(static_cast<double>(k), -grid_level));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    out.non_constant = (hi - lo) > 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    out.g = std::move(g);
    return out;
}

CriticalCompositionTest critical_composition_test(const SchauderSeries& f, const Evaluator& F,
                                                  const Evaluator& Fprime, double x0, int m_min,
                                                  int m_max) {
    // Hypothesis check: the schedule's alpha0 must exceed 1/2. The Delta_n
    // majorant gives a conservative alpha0 estimate over the deepest half.
    const int probe_depth = std::max(16, std::min(f.depth(), 40));
    double alpha0 = std::numeric_limits<double>::infinity();
    for (int n = std::max(1, (probe_depth + 1) / 2); n <= probe_depth; ++n) {
        const double d = f.schedule().level_abs_max(n);
        if (d > 0.0) alpha0 = std::min(alpha0, -std::log2(d) / n);
    }
    if (!(alpha0 > 0.5)) {
        throw std::domain_error("critical_composition_test: schedule alpha0 = " + format17(alpha0) +
                                " <= 1/2, the criterion's hypothesis fails");
    }
    CriticalCompositionTest out;
    out.fprime_at_fx0 = Fprime(f.eval(x0));
    Evaluator comp = [&f, &F](double x) { return F(f.eval(x)); };
    out.left = derivative_scan(comp, x0, Side::Left, m_min, m_max);
    out.right = derivative_scan(comp, x0, Side::Right, m_min, m_max);
    const bool zero_deriv = std::abs(out.fprime_at_fx0) <= 1e-9;
    const bool both_converge = out.left.verdict == ScanVerdict::Converges &&
                               out.right.verdict == ScanVerdict::Converges;
    out.consistent = (zero_deriv == both_converge);
    return out;
}

} // namespace schauder
