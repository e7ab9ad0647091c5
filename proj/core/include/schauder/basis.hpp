#pragma once

#include <cstdint>

namespace schauder {

/// Index (n, i) of the tent function sigma_{n,i}(x) = sigma(2^n x - i),
/// supported on [i/2^n, (i+1)/2^n] with unit peak at the midpoint.
struct BasisIndex {
    int level = 0;          // n >= 0
    std::int64_t pos = 0;   // 0 <= i <= 2^n - 1

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Number of positions at a level, 2^n.
constexpr std::int64_t positions_at_level(int level) noexcept {
    return std::int64_t{1} << level;
}

/// Evaluate sigma_{n,i} at x. Throws std::invalid_argument on a malformed
/// index. x outside the support (including outside [0,1]) yields 0.
double basis_eval(BasisIndex idx, double x);

/// The single position whose tent can be nonzero at x for a given level:
/// min(floor(2^n x), 2^n - 1). Clamping makes x = 1 well defined.
std::int64_t active_position(int level, double x) noexcept;

/// Tent value at x for the active position; the "one i per level" fact is
/// what makes series evaluation O(depth).
double tent_value(int level, std::int64_t pos, double x) noexcept;

} // namespace schauder
