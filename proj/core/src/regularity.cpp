#include "schauder/regularity.hpp"

#include "schauder/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schauder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool per_level_like(const CoefficientSchedule& s) {
    return s.kind() == CoefficientSchedule::Kind::PerLevel ||
           s.kind() == CoefficientSchedule::Kind::Lacunary;
}

} // namespace

void LevelExtremes::write_csv(std::ostream& out) const {
    out << "n,delta,Delta\n";
    for (std::size_t n = 0; n < delta.size(); ++n) {
        out << n << ',' << format17(delta[n]) << ',' << format17(Delta[n]) << '\n';
    }
}

LevelExtremes level_extremes(const CoefficientSchedule& schedule, int depth) {
    if (depth < 0) throw std::invalid_argument("level_extremes: negative depth");
    LevelExtremes e;
    e.delta.resize(static_cast<std::size_t>(depth) + 1);
    e.Delta.resize(static_cast<std::size_t>(depth) + 1);

    if (per_level_like(schedule)) {
        for (int n = 0; n <= depth; ++n) {
            const double v = std::abs(schedule.gamma(n, 0));
            e.delta[n] = e.Delta[n] = v;
        }
        return e;
    }
    if (schedule.kind() == CoefficientSchedule::Kind::Random && depth > 22) {
        throw std::invalid_argument("level_extremes: enumeration of a Random schedule beyond depth 22");
    }
    const int table_depth = schedule.is_explicit() ? schedule.explicit_depth() : depth;
    for (int n = 0; n <= depth; ++n) {
        if (n > table_depth) {
            e.delta[n] = e.Delta[n] = 0.0;
            continue;
        }
        double lo = kInf, hi = 0.0;
        for (std::int64_t i = 0; i < positions_at_level(n); ++i) {
            const double v = std::abs(schedule.gamma(n, i));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        e.delta[n] = lo;
        e.Delta[n] = hi;
    }
    return e;
}

ExponentBounds exponent_bounds(const LevelExtremes& extremes, double window_fraction) {
    const int depth = extremes.depth();
    if (depth < 8) throw std::invalid_argument("exponent_bounds: depth must be >= 8");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw std::invalid_argument("exponent_bounds: window fraction must be in (0,1]");
    }
    const int window = static_cast<int>(std::ceil(window_fraction * depth));
    const int first = std::max(1, depth - window + 1);

    ExponentBounds out;
    double a0 = kInf, a1 = kInf;
    for (int n = first; n <= depth; ++n) {
        if (extremes.Delta[n] > 0.0) {
            a0 = std::min(a0, -std::log2(extremes.Delta[n]) / n);
        } else {
            out.alpha0_infinite = true;
        }
        if (extremes.delta[n] > 0.0) {
            a1 = std::min(a1, -std::log2(extremes.delta[n]) / n);
        } else {
            out.alpha1_infinite = true;
        }
    }
    // A vanishing delta_n inside the window defeats the delta-based
    // criterion entirely (lacunary case): flag rather than estimate.
    out.alpha0 = a0;
    out.alpha1 = out.alpha1_infinite ? kInf : a1;
    if (out.alpha1_infinite) {
        out.note = "delta_n = 0 inside the window: the min-coefficient criterion is not applicable";
    }
    return out;
}

double probe_max_windowed(const LevelExtremes& extremes, double alpha, int depth) {
    depth = std::min(depth, extremes.depth());
    if (depth < 1) throw std::invalid_argument("probe_max_windowed: depth must be >= 1");
    const int first = std::max(1, (depth + 1) / 2);
    double m = 0.0;
    for (int n = first; n <= depth; ++n) {
        m = std::max(m, std::exp2(alpha * n) * extremes.delta[n]);
    }
    return m;
}

double probe_growth_ratio(const LevelExtremes& extremes, double alpha) {
    const int depth = extremes.depth();
    const int half = (depth + 1) / 2;
    const double lo = probe_max_windowed(extremes, alpha, half);
    const double hi = probe_max_windowed(extremes, alpha, depth);
    if (lo == 0.0) return hi > 0.0 ? kInf : 1.0;
    return hi / lo;
}

RegularityReport classify(const LevelExtremes& extremes) {
    RegularityReport r;
    r.extremes = extremes;
    r.depth = extremes.depth();
    if (r.depth < 8) throw std::invalid_argument("classify: depth must be >= 8");

    const ExponentBounds full = exponent_bounds(extremes, 0.5);
    r.alpha0 = full.alpha0;
    r.alpha1 = full.alpha1;
    r.alpha0_infinite = full.alpha0_infinite;
    r.alpha1_infinite = full.alpha1_infinite;
    r.everywhere_hoelder_below = full.alpha0;
    r.nowhere_one_sided_hoelder_above = full.alpha1;

    for (double a = 0.05; a <= 1.0 + 1e-12; a += 0.05) {
        r.probe_alphas.push_back(a);
        r.probe_growth.push_back(probe_growth_ratio(extremes, a));
    }

    r.conclusive = r.depth >= 16;

    bool tail_positive = true;
    for (int n = std::max(1, (r.depth + 1) / 2); n <= r.depth; ++n) {
        if (!(extremes.delta[n] > 0.0)) tail_positive = false;
    }

    if (r.conclusive && tail_positive && !r.alpha1_infinite) {
        // alpha1 estimate at half depth, same windowing convention.
        LevelExtremes half;
        const int hd = (r.depth + 1) / 2;
        half.delta.assign(extremes.delta.begin(), extremes.delta.begin() + hd + 1);
        half.Delta.assign(extremes.Delta.begin(), extremes.Delta.begin() + hd + 1);
        const double alpha1_half = exponent_bounds(half, 0.5).alpha1;
        r.completely_non_hoelder = std::isfinite(alpha1_half) && r.alpha1 <= 0.8 * alpha1_half;

        const double g1 = probe_growth_ratio(extremes, 1.0);
        r.girgensohn_no_one_sided_derivative = g1 >= 4.0;
    }
    if (!r.conclusive) r.note = "inconclusive at this depth";
    return r;
}

std::string RegularityReport::to_text() const {
    std::ostringstream out;
    out << "depth=" << depth << '\n';
    out << "alpha0=" << (alpha0_infinite ? "inf" : format17(alpha0)) << '\n';
    out << "alpha1=" << (alpha1_infinite ? "inf" : format17(alpha1)) << '\n';
    out << "everywhere_hoelder_below=" << (alpha0_infinite ? "inf" : format17(everywhere_hoelder_below)) << '\n';
    out << "nowhere_one_sided_hoelder_above="
        << (alpha1_infinite ? "inf" : format17(nowhere_one_sided_hoelder_above)) << '\n';
    out << "completely_non_hoelder=" << (completely_non_hoelder ? "true" : "false") << '\n';
    out << "girgensohn_no_one_sided_derivative="
        << (girgensohn_no_one_sided_derivative ? "true" : "false") << '\n';
    out << "conclusive=" << (conclusive ? "true" : "false") << '\n';
    for (std::size_t k = 0; k < probe_alphas.size(); ++k) {
        out << "probe_growth[alpha=" << format17(probe_alphas[k]) << "]=" << format17(probe_growth[k]) << '\n';
    }
    if (!note.empty()) out << "note=" << note << '\n';
    return out.str();
}

double branch_criterion(const CoefficientSchedule& schedule, int depth, double alpha) {
    if (depth < 0) throw std::invalid_argument("branch_criterion: negative depth");
    if (per_level_like(schedule)) {
        double m = 0.0;
        for (int n = 0; n <= depth; ++n) {
            m = std::max(m, std::exp2(alpha * n) * std::abs(schedule.gamma(n, 0)));
        }
        return m;
    }
    if (depth > 22) throw std::invalid_argument("branch_criterion: depth > 22 table enumeration");
    // Bottom-up: V over the deepest level first.
    std::vector<double> next(static_cast<std::size_t>(positions_at_level(depth + 1)), 0.0);
    std::vector<double> cur;
    for (int n = depth; n >= 0; --n) {
        cur.assign(static_cast<std::size_t>(positions_at_level(n)), 0.0);
        for (std::int64_t i = 0; i < positions_at_level(n); ++i) {
            const double own = std::exp2(alpha * n) * std::abs(schedule.gamma(n, i));
            const double best_child = std::min(next[static_cast<std::size_t>(2 * i)],
                                               next[static_cast<std::size_t>(2 * i + 1)]);
            cur[static_cast<std::size_t>(i)] = std::max(own, best_child);
        }
        next.swap(cur);
    }
    return next[0];
}

} // namespace schauder
