#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace schauder {

using Evaluator = std::function<double(double)>;

enum class Side { Left, Right };

/// One-sided pointwise Hoelder probe: per dyadic scale m the sup of
/// |f(y) - f(x0)| over probe points with |y - x0| in [2^-(m+1), 2^-m].
struct HolderScanResult {
    double x0 = 0.0;
    Side side = Side::Right;

    struct Scale {
        int m = 0;
        double h = 0.0;         // 2^-m, the coarse end of the band
        double sup_diff = 0.0;
    };
    std::vector<Scale> scales;  // strictly decreasing in h

    /// Least-squares slope of log2(sup) against -m over the deepest half
    /// of scales; +inf (flagged) when every sampled difference vanishes.
    double exponent_estimate = 0.0;
    bool infinite_flag = false;

    /// CSV `m,h,sup_diff`.
    void write_csv(std::ostream& out) const;
};

/// Scan scales m = m_min..m_max with `probes_per_band` points per band
/// (>= 33). Throws when x0 +/- 2^-m_min leaves [0,1] on the chosen side.
HolderScanResult holder_scan(const Evaluator& f, double x0, Side side, int m_min, int m_max,
                             int probes_per_band = 48);

enum class ScanVerdict { Converges, Diverges, Oscillates };

/// One-sided difference quotients q_m = (f(x0 +/- 2^-m) - f(x0)) / (+/-2^-m).
struct DerivativeScan {
    double x0 = 0.0;
    Side side = Side::Right;
    int m_min = 0;
    std::vector<double> q;      // q[k] for m = m_min + k

    ScanVerdict verdict = ScanVerdict::Oscillates;
    double limit_estimate = 0.0;  // meaningful for Converges
    double max_abs_q = 0.0;

    std::string verdict_name() const;
    void write_csv(std::ostream& out) const;  // CSV `m,h,q`
};

/// Verdict rules: Converges when the last five quotients agree to 1e-6
/// relative (or have collapsed toward 0 against the scan's own scale),
/// Diverges when max |q_m| exceeds 10 and the late quotients are at least
/// as large as the early ones, Oscillates otherwise.
DerivativeScan derivative_scan(const Evaluator& f, double x0, Side side, int m_min, int m_max);

} // namespace schauder
