#include "schauder/rng.hpp"

#include <cmath>
#include <numbers>

namespace schauder::rng {

double normal(std::uint64_t seed, std::uint64_t level, std::uint64_t pos) noexcept {
    const std::uint64_t h1 = mix3(seed, level, pos);
    const std::uint64_t h2 = splitmix64(h1 ^ 0xDEADBEEFCAFEBABEull);
    const double u1 = uniform01(h1);
    const double u2 = uniform01(h2);
    // Box-Muller; u1 is bounded away from 0 so the log is finite.
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace schauder::rng
