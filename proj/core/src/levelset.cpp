#include "schauder/levelset.hpp"

#include "schauder/io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schauder {

namespace {

struct ChunkCounts {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

ChunkCounts count_cells(const SchauderSeries& s, double lambda, int level, double tail,
                        std::int64_t first_cell, std::int64_t last_cell) {
    ChunkCounts out;
    const std::int64_t cells = std::int64_t{1} << level;
    const double margin = 2.0 * tail;
    double left = s.eval(std::ldexp(static_cast<double>(first_cell), -level));
    for (std::int64_t a = first_cell; a < last_cell; ++a) {
        const double mid = s.eval(std::ldexp(2.0 * static_cast<double>(a) + 1.0, -(level + 1)));
        const double right = s.eval(std::ldexp(static_cast<double>(a) + 1.0, -level));
        const double lo = std::min(left, std::min(mid, right));
        const double hi = std::max(left, std::max(mid, right));
        const bool last = (a == cells - 1);
        if (lambda >= lo - tail && (lambda < hi + tail || (last && lambda <= hi + tail))) {
            ++out.upper;
        }
        if ((left <= lambda - margin && right > lambda + margin) ||
            (left >= lambda + margin && right < lambda - margin)) {
            ++out.lower;
        }
        left = right;
    }
    return out;
}

} // namespace

CoverCount cover_count(const SchauderSeries& s, double lambda, int level, int threads) {
    if (level < 0 || level > 26) throw std::invalid_argument("cover_count: level out of range");
    if (level > s.depth()) throw std::invalid_argument("cover_count: level exceeds series depth");
    if (threads < 1) throw std::invalid_argument("cover_count: thread count must be >= 1");
    const double tail = s.schedule().tail_sup(level);
    if (!std::isfinite(tail)) throw std::domain_error("cover_count: tail bound not finite");

    const std::int64_t cells = std::int64_t{1} << level;
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, cells));
    std::vector<ChunkCounts> parts(static_cast<std::size_t>(workers));
    if (workers == 1) {
        parts[0] = count_cells(s, lambda, level, tail, 0, cells);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::int64_t chunk = (cells + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t first = std::min<std::int64_t>(w * chunk, cells);
            const std::int64_t last = std::min<std::int64_t>(first + chunk, cells);
            pool.emplace_back([&, w, first, last] {
                parts[static_cast<std::size_t>(w)] = count_cells(s, lambda, level, tail, first, last);
            });
        }
        for (auto& t : pool) t.join();
    }
    CoverCount total{level, 0, 0};
    for (const auto& p : parts) {
        total.n_lower += p.lower;
        total.n_upper += p.upper;
    }
    return total;
}

namespace {

double fit_slope(const std::vector<CoverCount>& counts, bool upper) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (const auto& c : counts) {
        const std::int64_t v = upper ? c.n_upper : c.n_lower;
        if (v <= 0) continue;
        const double x = c.level;
        const double y = std::log2(static_cast<double>(v));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used < 2) return 0.0;
    const double denom = used * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return std::clamp((used * sxy - sx * sy) / denom, 0.0, 1.0);
}

} // namespace

DimensionFit dimension_fit(std::vector<CoverCount> counts) {
    if (counts.size() < 4) throw std::invalid_argument("dimension_fit: need at least 4 levels");
    std::sort(counts.begin(), counts.end(),
              [](const CoverCount& a, const CoverCount& b) { return a.level < b.level; });
    DimensionFit fit;
    fit.empty = std::all_of(counts.begin(), counts.end(),
                            [](const CoverCount& c) { return c.n_upper == 0; });
    fit.slope_upper = fit_slope(counts, true);
    fit.slope_lower = fit_slope(counts, false);
    fit.counts = std::move(counts);
    return fit;
}

std::string DimensionFit::to_text() const {
    std::ostringstream out;
    out << "levels=" << counts.size() << '\n';
    out << "slope_upper=" << format17(slope_upper) << '\n';
    out << "slope_lower=" << format17(slope_lower) << '\n';
    out << "empty=" << (empty ? "true" : "false") << '\n';
    return out.str();
}

void DimensionFit::write_csv(std::ostream& out) const {
    out << "n,N_lower,N_upper\n";
    for (const auto& c : counts) {
        out << c.level << ',' << c.n_lower << ',' << c.n_upper << '\n';
    }
}

LacunarySeries lacunary_series(const std::vector<int>& levels, int depth_cap) {
    if (levels.empty()) throw std::invalid_argument("lacunary_series: empty level list");
    const CoefficientSchedule sched = named_schedule("lacunary", 0.0, levels);
    bool increasing = true;
    for (std::size_t k = 2; k < levels.size(); ++k) {
        const double prev = static_cast<double>(levels[k - 1]) / levels[k - 2];
        const double cur = static_cast<double>(levels[k]) / levels[k - 1];
        if (cur <= prev) increasing = false;
    }
    return {SchauderSeries(0.0, 0.0, sched, depth_cap), increasing};
}

} // namespace schauder
