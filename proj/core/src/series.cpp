#include "schauder/series.hpp"

#include "schauder/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schauder {

SchauderSeries::SchauderSeries(double a, double b, CoefficientSchedule schedule, int depth)
    : a_(a), b_(b), schedule_(std::move(schedule)), depth_(depth) {
    if (depth < 0 || depth > kMaxDepth) {
        throw std::invalid_argument("SchauderSeries: depth must be in [0, " + std::to_string(kMaxDepth) + "]");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("SchauderSeries: non-finite affine part");
    }
    if (schedule_.kind() == CoefficientSchedule::Kind::Lacunary) {
        for (int n : schedule_.lacunary_levels()) {
            if (n <= depth_) active_levels_.push_back(n);
        }
    } else {
        const int top = std::min(depth_, schedule_.max_nonzero_level());
        for (int n = 0; n <= top; ++n) active_levels_.push_back(n);
    }
}

double SchauderSeries::eval(double x) const {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("SchauderSeries::eval: x outside [0,1]");
    }
    double s = a_ + b_ * x;
    for (int n : active_levels_) {
        const std::int64_t i = active_position(n, x);
        const double tent = tent_value(n, i, x);
        if (tent != 0.0) s += schedule_.gamma(n, i) * tent;
    }
    return s;
}

SampleGrid SchauderSeries::eval_grid(int grid_level, std::size_t budget_values) const {
    if (grid_level < 0 || grid_level > 52) {
        throw std::invalid_argument("eval_grid: grid level out of range");
    }
    const std::size_t count = (std::size_t{1} << grid_level) + 1;
    if (count > budget_values) {
        throw std::length_error("eval_grid: 2^" + std::to_string(grid_level) +
                                "+1 samples exceed the memory budget");
    }
    SampleGrid grid;
    grid.level = grid_level;
    grid.values.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
        grid.values[j] = eval(grid.x_of(j));
    }
    return grid;
}

} // namespace schauder
