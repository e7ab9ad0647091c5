#include "schauder/scan.hpp"

#include "schauder/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace schauder {

namespace {

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

} // namespace

void HolderScanResult::write_csv(std::ostream& out) const {
    out << "m,h,sup_diff\n";
    for (const auto& s : scales) {
        out << s.m << ',' << format17(s.h) << ',' << format17(s.sup_diff) << '\n';
    }
}

HolderScanResult holder_scan(const Evaluator& f, double x0, Side side, int m_min, int m_max,
                             int probes_per_band) {
    if (m_min < 1 || m_max < m_min || m_max > 50) throw std::invalid_argument("holder_scan: bad scale range");
    if (probes_per_band < 33) throw std::invalid_argument("holder_scan: need at least 33 probes per band");
    const double dir = side == Side::Right ? 1.0 : -1.0;
    const double reach = x0 + dir * std::exp2(-m_min);
    if (!(reach >= 0.0 && reach <= 1.0) || !(x0 >= 0.0 && x0 <= 1.0)) {
        throw std::invalid_argument("holder_scan: x0 +/- 2^-m_min leaves [0,1] on the scanned side");
    }

    HolderScanResult res;
    res.x0 = x0;
    res.side = side;
    const double f0 = f(x0);
    for (int m = m_min; m <= m_max; ++m) {
        const double h_hi = std::exp2(-m);
        const double h_lo = 0.5 * h_hi;
        double sup = 0.0;
        for (int p = 0; p < probes_per_band; ++p) {
            const double h = h_lo + (h_hi - h_lo) * (static_cast<double>(p) / (probes_per_band - 1));
            const double y = x0 + dir * h;
            sup = std::max(sup, std::abs(f(y) - f0));
        }
        res.scales.push_back({m, h_hi, sup});
    }

    std::vector<double> xs, ys;
    const int half_start = m_min + (m_max - m_min + 1) / 2;
    for (const auto& s : res.scales) {
        if (s.m >= half_start && s.sup_diff > 0.0) {
            xs.push_back(-static_cast<double>(s.m));
            ys.push_back(std::log2(s.sup_diff));
        }
    }
    if (xs.size() < 2) {
        res.infinite_flag = true;
        res.exponent_estimate = std::numeric_limits<double>::infinity();
    } else {
        res.exponent_estimate = least_squares_slope(xs, ys);
    }
    return res;
}

std::string DerivativeScan::verdict_name() const {
    switch (verdict) {
        case ScanVerdict::Converges: return "converges";
        case ScanVerdict::Diverges: return "diverges";
        case ScanVerdict::Oscillates: return "oscillates";
    }
    return "?";
}

void DerivativeScan::write_csv(std::ostream& out) const {
    out << "m,h,q\n";
    for (std::size_t k = 0; k < q.size(); ++k) {
        const int m = m_min + static_cast<int>(k);
        out << m << ',' << format17(std::exp2(-m)) << ',' << format17(q[k]) << '\n';
    }
}

DerivativeScan derivative_scan(const Evaluator& f, double x0, Side side, int m_min, int m_max) {
    if (m_min < 1 || m_max < m_min || m_max > 50) throw std::invalid_argument("derivative_scan: bad scale range");
    const double dir = side == Side::Right ? 1.0 : -1.0;
    const double reach = x0 + dir * std::exp2(-m_min);
    if (!(reach >= 0.0 && reach <= 1.0) || !(x0 >= 0.0 && x0 <= 1.0)) {
        throw std::invalid_argument("derivative_scan: x0 +/- 2^-m_min leaves [0,1] on the scanned side");
    }

    DerivativeScan res;
    res.x0 = x0;
    res.side = side;
    res.m_min = m_min;
    const double f0 = f(x0);
    for (int m = m_min; m <= m_max; ++m) {
        const double h = dir * std::exp2(-m);
        res.q.push_back((f(x0 + h) - f0) / h);
    }
    for (double v : res.q) res.max_abs_q = std::max(res.max_abs_q, std::abs(v));

    const std::size_t count = res.q.size();
    const std::size_t tail_n = std::min<std::size_t>(5, count);
    std::vector<double> tail(res.q.end() - tail_n, res.q.end());
    std::vector<double> sorted_tail = tail;
    std::sort(sorted_tail.begin(), sorted_tail.end());
    const double tail_median = sorted_tail[sorted_tail.size() / 2];
    const double spread = *std::max_element(tail.begin(), tail.end()) -
                          *std::min_element(tail.begin(), tail.end());
    double tail_abs = 0.0, head_abs = 0.0;
    for (std::size_t k = 0; k < tail_n; ++k) {
        tail_abs = std::max(tail_abs, std::abs(res.q[count - 1 - k]));
        head_abs = std::max(head_abs, std::abs(res.q[k]));
    }
    const std::size_t third = std::max<std::size_t>(1, count / 3);
    double early = 0.0, late = 0.0;
    for (std::size_t k = 0; k < third; ++k) early = std::max(early, std::abs(res.q[k]));
    for (std::size_t k = count - third; k < count; ++k) late = std::max(late, std::abs(res.q[k]));

    if (spread <= std::max(1e-6 * std::max(1.0, std::abs(tail_median)), 1e-12)) {
        res.verdict = ScanVerdict::Converges;
        res.limit_estimate = tail_median;
    } else if (tail_abs <= 0.1 && tail_abs <= 0.25 * std::max(head_abs, 1e-300)) {
        // The quotients have collapsed by more than an order of magnitude
        // against their own scale: converging to 0 slower than the spread
        // tolerance can certify.
        res.verdict = ScanVerdict::Converges;
        res.limit_estimate = 0.0;
    } else if (res.max_abs_q > 10.0 && late >= early) {
        res.verdict = ScanVerdict::Diverges;
    } else {
        res.verdict = ScanVerdict::Oscillates;
    }
    return res;
}

} // namespace schauder
