#pragma once

#include <cstdint>
#include <string>

namespace schauder {

/// One sampled band of the binary tree, layers n .. n+k, with standard
/// normal marks keyed (seed, layer, index). A layer-m vertex is
/// exceptional iff |xi| < 2^-(epsilon m) (absolute layer index). The
/// verdict is whether some layer-n vertex starts a path to layer n+k
/// through exceptional vertices only.
struct PercolationTrial {
    int start_level = 0;   // n
    int band_depth = 0;    // k >= 1
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    bool exists_exceptional_path = false;
};

/// Computed by short-circuited downward recursion, which evaluates the
/// same predicate as the full DP: live(m,i) = exceptional(m,i) and
/// (m = n+k or live(m+1,2i) or live(m+1,2i+1)). Requires k >= 1,
/// epsilon in [0,1] (0 is the degenerate sanity case) and n+k <= 24.
PercolationTrial percolation_trial(int n, int k, double epsilon, std::uint64_t seed);

struct PercolationEstimate {
    int start_level = 0;
    int band_depth = 0;
    double epsilon = 0.0;
    int trials = 0;
    std::uint64_t base_seed = 0;

    std::int64_t successes = 0;
    double p_hat = 0.0;
    double paper_bound = 0.0;   // 2^(n + 2k - (k+1) epsilon n)
    bool vacuous = false;       // bound >= 1: the consistency check is void
    bool consistent = false;    // p_hat <= min(1,bound) + 3 sqrt(p(1-p)/trials)

    std::string to_text() const;
};

/// Monte Carlo estimate over `trials` independent trials with seeds
/// base_seed, base_seed+1, ... Trial verdicts are a pure function of the
/// trial seed, so any thread count yields identical results.
PercolationEstimate percolation_estimate(int n, int k, double epsilon, int trials,
                                         std::uint64_t base_seed, int threads = 1);

} // namespace schauder
