#pragma once

#include "schauder/series.hpp"

#include <cstdint>

namespace schauder {

/// Brownian bridge realized through the expansion
/// sum 2^-(n/2) xi_{n,i} sigma_{n,i} with i.i.d. standard normal xi drawn
/// from the counter-based generator: deterministic in the seed, endpoint
/// values exactly 0, Var(B(1/2)) = Var(xi_{0,0}) = 1 under this scaling.
struct BridgeSample {
    std::uint64_t seed = 0;
    int depth = 0;
    SchauderSeries series;
};

/// Throws unless 0 <= depth <= 50.
BridgeSample bridge_sample(int depth, std::uint64_t seed);

} // namespace schauder
