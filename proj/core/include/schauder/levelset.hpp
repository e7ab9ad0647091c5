#pragma once

#include "schauder/series.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace schauder {

/// Dyadic covering counts for the level set {x : f(x) = lambda} at one
/// scale. N_upper counts cells whose exact depth-n partial-sum range,
/// widened by the tail beyond level n, contains lambda (half-open on the
/// right so a value hit exactly on a shared cell edge is counted once);
/// N_lower counts cells whose endpoint values straddle lambda with margin
/// twice the tail, certifying a crossing. 0 <= N_lower <= N_upper <= 2^n.
struct CoverCount {
    int level = 0;
    std::int64_t n_lower = 0;
    std::int64_t n_upper = 0;
};

/// Exact per-cell min/max of the depth-n partial sum from the three cell
/// values f(a/2^n), f((2a+1)/2^{n+1}), f((a+1)/2^n): levels above n vanish
/// at those points, and the partial sum is piecewise linear between them.
/// Requires level <= series depth. Cell work parallelizes over disjoint
/// chunks; counts are reduced by summation, so the result is independent
/// of the thread count.
CoverCount cover_count(const SchauderSeries& s, double lambda, int level, int threads = 1);

/// Least-squares slopes of log2(count) against level, positive counts
/// only; slopes clamped to [0,1]. `empty` when no upper count is positive.
struct DimensionFit {
    std::vector<CoverCount> counts;
    double slope_upper = 0.0;
    double slope_lower = 0.0;
    bool empty = false;

    std::string to_text() const;
    /// CSV `n,N_lower,N_upper`.
    void write_csv(std::ostream& out) const;
};

/// Requires at least 4 levels.
DimensionFit dimension_fit(std::vector<CoverCount> counts);

struct LacunarySeries {
    SchauderSeries series;
    bool ratios_increasing = true;  // hypothesis n_{k+1}/n_k increasing
};

/// Lacunary schedule with scale 2^-(n_k) on the listed levels, zero
/// elsewhere, truncated at depth_cap. Non-increasing level ratios violate
/// the dimension lemma's hypothesis: flagged, still constructed.
LacunarySeries lacunary_series(const std::vector<int>& levels, int depth_cap);

} // namespace schauder
