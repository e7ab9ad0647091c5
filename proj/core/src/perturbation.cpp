#include "schauder/perturbation.hpp"

#include <cmath>
#include <stdexcept>

namespace schauder {

Evaluator escape_perturbation(Evaluator f, double eps, int n) {
    if (!(eps > 0.0)) throw std::invalid_argument("escape_perturbation: eps must be > 0");
    if (n < 1) throw std::invalid_argument("escape_perturbation: n must be >= 1");
    const double freq = 100.0 * std::pow(eps / 3.0, -static_cast<double>(n));
    return [f = std::move(f), eps, freq](double x) { return f(x) + eps * std::sin(freq * x); };
}

AnMembership an_membership_test(const Evaluator& f, int n, double x0, int probes_per_side) {
    if (n < 1) throw std::invalid_argument("an_membership_test: n must be >= 1");
    if (probes_per_side < 2) throw std::invalid_argument("an_membership_test: too few probes");
    if (!(x0 >= 0.0 && x0 <= 1.0)) throw std::invalid_argument("an_membership_test: x0 outside [0,1]");

    const double f0 = f(x0);
    const double d_max = 1.0 / n;
    const double d_min = 1e-12 / n;
    const double ratio = std::pow(d_max / d_min, 1.0 / (probes_per_side - 1));
    const double inv_n = 1.0 / n;

    AnMembership out;
    for (const double dir : {+1.0, -1.0}) {
        bool ok = true;
        std::optional<double> witness;
        double d = d_min;
        for (int p = 0; p < probes_per_side; ++p, d *= ratio) {
            const double y = x0 + dir * d;
            if (y <= 0.0 || y >= 1.0) continue;
            const double dist = std::abs(y - x0);
            if (dist <= 0.0 || dist >= d_max) continue;
            if (!(std::abs(f0 - f(y)) < std::pow(dist, inv_n))) {
                ok = false;
                witness = y;
                break;
            }
        }
        if (ok) {
            out.member = true;
            out.witness_y.reset();
            return out;
        }
        if (!out.witness_y) out.witness_y = witness;
    }
    out.member = false;
    return out;
}

} // namespace schauder
