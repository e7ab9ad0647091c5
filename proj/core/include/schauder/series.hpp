#pragma once

#include "schauder/grid.hpp"
#include "schauder/schedule.hpp"

#include <cstddef>

namespace schauder {

/// Truncated expansion a + b x + sum_{n<=depth} gamma_{n,i} sigma_{n,i}(x).
///
/// Evaluation touches exactly one position per level, so a point costs
/// O(depth) (O(#levels) for lacunary schedules). Dyadic grid points j/2^M
/// are exact doubles for M <= 52, which caps the supported depth at 50.
class SchauderSeries {
public:
    static constexpr int kMaxDepth = 50;

    SchauderSeries(double a, double b, CoefficientSchedule schedule, int depth);

    double eval(double x) const;  // throws std::domain_error outside [0,1]
    double operator()(double x) const { return eval(x); }

    /// values[j] = eval(j/2^M); bit-identical to pointwise calls.
    /// Throws std::length_error when 2^M + 1 exceeds `budget_values`.
    SampleGrid eval_grid(int grid_level, std::size_t budget_values = (std::size_t{1} << 26) + 1) const;

    /// Upper bound on sup_x |f_inf(x) - f_depth(x)| = sum_{n>depth} Delta_n.
    double tail_bound() const { return schedule_.tail_sup(depth_); }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int depth() const noexcept { return depth_; }
    const CoefficientSchedule& schedule() const noexcept { return schedule_; }

private:
    double a_;
    double b_;
    CoefficientSchedule schedule_;
    int depth_;
    std::vector<int> active_levels_;  // levels that can carry coefficients
};

} // namespace schauder
