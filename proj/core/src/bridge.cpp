#include "schauder/bridge.hpp"

namespace schauder {

BridgeSample bridge_sample(int depth, std::uint64_t seed) {
    return {seed, depth, SchauderSeries(0.0, 0.0, bridge_schedule(seed), depth)};
}

} // namespace schauder
