#include "schauder/basis.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace schauder {

double tent_value(int level, std::int64_t pos, double x) noexcept {
    const double t = std::ldexp(x, level) - static_cast<double>(pos);
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return t <= 0.5 ? 2.0 * t : 2.0 - 2.0 * t;
}

double basis_eval(BasisIndex idx, double x) {
    if (idx.level < 0 || idx.level > 62 || idx.pos < 0 || idx.pos >= positions_at_level(idx.level)) {
        throw std::invalid_argument("basis_eval: invalid index (n=" + std::to_string(idx.level) +
                                    ", i=" + std::to_string(idx.pos) + ")");
    }
    return tent_value(idx.level, idx.pos, x);
}

std::int64_t active_position(int level, double x) noexcept {
    const std::int64_t count = positions_at_level(level);
    auto i = static_cast<std::int64_t>(std::floor(std::ldexp(x, level)));
    if (i < 0) i = 0;
    if (i > count - 1) i = count - 1;
#ifndef NDEBUG
    // Exactly one tent per level is nonzero on (0,1): neighbors must vanish.
    if (x > 0.0 && x < 1.0) {
        if (i > 0) assert(tent_value(level, i - 1, x) == 0.0);
        if (i < count - 1) assert(tent_value(level, i + 1, x) == 0.0);
    }
#endif
    return i;
}

} // namespace schauder
