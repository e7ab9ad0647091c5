#pragma once

#include <cstdint>

namespace schauder::rng {

/// SplitMix64 finalizer; full-avalanche 64-bit mixing.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Combine a seed with two coordinates into one well-mixed word.
constexpr std::uint64_t mix3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ (a * 0xA24BAED4963EE407ull));
    h = splitmix64(h ^ (b * 0x9FB21C651E98DF25ull));
    return h;
}

/// Map 64 random bits to (0,1); never returns 0 or 1 exactly.
constexpr double uniform01(std::uint64_t h) noexcept {
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

/// Counter-based standard normal keyed by (seed, level, pos).
/// Same key always yields the same variate, regardless of evaluation
/// order, so lazily materialized coefficient tables are reproducible.
double normal(std::uint64_t seed, std::uint64_t level, std::uint64_t pos) noexcept;

} // namespace schauder::rng
