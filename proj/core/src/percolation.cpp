#include "schauder/percolation.hpp"

#include "schauder/io.hpp"
#include "schauder/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace schauder {

namespace {

bool exceptional(std::uint64_t seed, int layer, std::int64_t index, double epsilon) {
    const double xi = rng::normal(seed, static_cast<std::uint64_t>(layer),
                                  static_cast<std::uint64_t>(index));
    return std::abs(xi) < std::exp2(-epsilon * layer);
}

bool live(std::uint64_t seed, int layer, std::int64_t index, int last_layer, double epsilon) {
    if (!exceptional(seed, layer, index, epsilon)) return false;
    if (layer == last_layer) return true;
    return live(seed, layer + 1, 2 * index, last_layer, epsilon) ||
           live(seed, layer + 1, 2 * index + 1, last_layer, epsilon);
}

} // namespace

PercolationTrial percolation_trial(int n, int k, double epsilon, std::uint64_t seed) {
    if (n < 0 || k < 1) throw std::invalid_argument("percolation_trial: need n >= 0, k >= 1");
    if (n + k > 24) throw std::invalid_argument("percolation_trial: n + k > 24 exceeds the node budget");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("percolation_trial: epsilon outside [0,1]");
    }
    PercolationTrial t{n, k, epsilon, seed, false};
    const std::int64_t width = std::int64_t{1} << n;
    for (std::int64_t i = 0; i < width && !t.exists_exceptional_path; ++i) {
        t.exists_exceptional_path = live(seed, n, i, n + k, epsilon);
    }
    return t;
}

PercolationEstimate percolation_estimate(int n, int k, double epsilon, int trials,
                                         std::uint64_t base_seed, int threads) {
    if (trials < 1) throw std::invalid_argument("percolation_estimate: trials must be >= 1");
    if (threads < 1) throw std::invalid_argument("percolation_estimate: thread count must be >= 1");

    PercolationEstimate est;
    est.start_level = n;
    est.band_depth = k;
    est.epsilon = epsilon;
    est.trials = trials;
    est.base_seed = base_seed;

    const int workers = std::min(threads, trials);
    std::vector<std::int64_t> parts(static_cast<std::size_t>(workers), 0);
    auto run = [&](int w) {
        std::int64_t hits = 0;
        for (int t = w; t < trials; t += workers) {
            if (percolation_trial(n, k, epsilon, base_seed + static_cast<std::uint64_t>(t))
                    .exists_exceptional_path) {
                ++hits;
            }
        }
        parts[static_cast<std::size_t>(w)] = hits;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (std::int64_t h : parts) est.successes += h;

    est.p_hat = static_cast<double>(est.successes) / trials;
    est.paper_bound = std::exp2(n + 2.0 * k - (k + 1.0) * epsilon * n);
    est.vacuous = est.paper_bound >= 1.0;
    const double band = 3.0 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / trials);
    est.consistent = est.p_hat <= std::min(1.0, est.paper_bound) + band;
    return est;
}

std::string PercolationEstimate::to_text() const {
    std::ostringstream out;
    out << "n=" << start_level << '\n';
    out << "k=" << band_depth << '\n';
    out << "epsilon=" << format17(epsilon) << '\n';
    out << "trials=" << trials << '\n';
    out << "base_seed=" << base_seed << '\n';
    out << "successes=" << successes << '\n';
    out << "p_hat=" << format17(p_hat) << '\n';
    out << "paper_bound=" << format17(paper_bound) << '\n';
    out << "vacuous=" << (vacuous ? "true" : "false") << '\n';
    out << "consistent=" << (consistent ? "true" : "false") << '\n';
    return out.str();
}

} // namespace schauder
