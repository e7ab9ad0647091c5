#include "schauder/schedule.hpp"

#include "schauder/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace schauder {

namespace {

enum class ScaleForm { Zero, Takagi, TakagiLog, SqrtBridge, Power, NonHoelder, Custom };

struct LevelScale {
    ScaleForm form = ScaleForm::Zero;
    double beta = 0.0;                     // Power only
    std::function<double(int)> custom;     // Custom only

    double value(int n) const {
        switch (form) {
            case ScaleForm::Zero: return 0.0;
            case ScaleForm::Takagi: return std::exp2(-static_cast<double>(n));
            case ScaleForm::TakagiLog: return static_cast<double>(n) * std::exp2(-static_cast<double>(n));
            case ScaleForm::SqrtBridge: return std::exp2(-0.5 * static_cast<double>(n));
            case ScaleForm::Power: return std::exp2(-beta * static_cast<double>(n));
            case ScaleForm::NonHoelder: return 1.0 / ((n + 1.0) * (n + 1.0));
            case ScaleForm::Custom: return custom(n);
        }
        return 0.0;
    }
};

// sum_{j >= first} j^-2, bounded above by the partial sum plus the
// integral remainder 1/J.
double zeta2_tail_from(std::int64_t first) {
    double acc = 0.0;
    const std::int64_t last = first + 1'000'000;
    for (std::int64_t j = first; j < last; ++j) acc += 1.0 / (static_cast<double>(j) * static_cast<double>(j));
    return acc + 1.0 / static_cast<double>(last);
}

// sum_{n > L} |value(n)| for a custom scale, with a divergence guard.
double numeric_tail(const LevelScale& s, int from_level, const std::function<double(int)>& weight) {
    double acc = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int rising = 0;
    for (int n = from_level + 1; n < from_level + 200'000; ++n) {
        const double term = std::abs(s.value(n)) * (weight ? weight(n) : 1.0);
        acc += term;
        if (term <= 1e-18 * std::max(1.0, acc)) return acc;
        if (term >= prev) {
            if (++rising > 64) throw std::domain_error("tail_sup: coefficient majorant series does not converge");
        } else {
            rising = 0;
        }
        prev = term;
    }
    throw std::domain_error("tail_sup: coefficient majorant series converges too slowly");
}

double random_envelope(int n) {
    return std::sqrt(2.0 * (n + 1.0) * std::numbers::ln2) + 4.0;
}

} // namespace

struct CoefficientSchedule::Impl {
    Kind kind = Kind::PerLevel;
    LevelScale scale;                       // PerLevel, Lacunary, Random
    std::vector<std::vector<double>> rows;  // Explicit
    std::vector<double> row_abs_max;        // Explicit, per level
    std::vector<int> levels;                // Lacunary, sorted ascending
    std::uint64_t seed = 0;                 // Random

    bool lacunary_has(int n) const {
        return std::binary_search(levels.begin(), levels.end(), n);
    }
};

CoefficientSchedule::CoefficientSchedule() : CoefficientSchedule(zero().impl_) {}
CoefficientSchedule::CoefficientSchedule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

CoefficientSchedule CoefficientSchedule::zero() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PerLevel;
    impl->scale.form = ScaleForm::Zero;
    return CoefficientSchedule(std::move(impl));
}

CoefficientSchedule CoefficientSchedule::per_level(std::function<double(int)> c) {
    if (!c) throw std::invalid_argument("per_level: null scale function");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PerLevel;
    impl->scale.form = ScaleForm::Custom;
    impl->scale.custom = std::move(c);
    return CoefficientSchedule(std::move(impl));
}

CoefficientSchedule CoefficientSchedule::explicit_table(std::vector<std::vector<double>> rows) {
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].size() != static_cast<std::size_t>(std::int64_t{1} << n)) {
            throw std::invalid_argument("explicit_table: level " + std::to_string(n) + " must have 2^n entries");
        }
        for (double v : rows[n]) {
            if (!std::isfinite(v)) throw std::invalid_argument("explicit_table: non-finite coefficient");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Explicit;
    impl->row_abs_max.reserve(rows.size());
    for (const auto& row : rows) {
        double m = 0.0;
        for (double v : row) m = std::max(m, std::abs(v));
        impl->row_abs_max.push_back(m);
    }
    impl->rows = std::move(rows);
    return CoefficientSchedule(std::move(impl));
}

CoefficientSchedule CoefficientSchedule::lacunary(std::vector<int> levels, std::function<double(int)> scale) {
    if (levels.empty()) throw std::invalid_argument("lacunary: empty level list");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k] < 0) throw std::invalid_argument("lacunary: negative level");
        if (k > 0 && levels[k] <= levels[k - 1]) {
            throw std::invalid_argument("lacunary: levels must be strictly increasing");
        }
    }
    if (!scale) throw std::invalid_argument("lacunary: null scale function");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Lacunary;
    impl->levels = std::move(levels);
    impl->scale.form = ScaleForm::Custom;
    impl->scale.custom = std::move(scale);
    return CoefficientSchedule(std::move(impl));
}

CoefficientSchedule CoefficientSchedule::random_normal(std::function<double(int)> scale, std::uint64_t seed) {
    if (!scale) throw std::invalid_argument("random_normal: null scale function");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Random;
    impl->seed = seed;
    impl->scale.form = ScaleForm::Custom;
    impl->scale.custom = std::move(scale);
    return CoefficientSchedule(std::move(impl));
}

CoefficientSchedule::Kind CoefficientSchedule::kind() const noexcept { return impl_->kind; }

double CoefficientSchedule::gamma(int level, std::int64_t pos) const {
    if (level < 0 || pos < 0 || pos >= positions_at_level(level)) {
        throw std::invalid_argument("gamma: invalid basis index");
    }
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::PerLevel:
            return im.scale.value(level);
        case Kind::Explicit:
            if (static_cast<std::size_t>(level) >= im.rows.size()) return 0.0;
            return im.rows[level][static_cast<std::size_t>(pos)];
        case Kind::Lacunary:
            return im.lacunary_has(level) ? im.scale.value(level) : 0.0;
        case Kind::Random:
            return im.scale.value(level) * rng::normal(im.seed, static_cast<std::uint64_t>(level),
                                                       static_cast<std::uint64_t>(pos));
    }
    return 0.0;
}

double CoefficientSchedule::level_abs_max(int level) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::PerLevel:
            return std::abs(im.scale.value(level));
        case Kind::Explicit:
            if (static_cast<std::size_t>(level) >= im.row_abs_max.size()) return 0.0;
            return im.row_abs_max[level];
        case Kind::Lacunary:
            return im.lacunary_has(level) ? std::abs(im.scale.value(level)) : 0.0;
        case Kind::Random:
            return std::abs(im.scale.value(level)) * random_envelope(level);
    }
    return 0.0;
}

double CoefficientSchedule::tail_sup(int from_level) const {
    const Impl& im = *impl_;
    const int L = std::max(from_level, -1);
    switch (im.kind) {
        case Kind::PerLevel:
            switch (im.scale.form) {
                case ScaleForm::Zero:
                    return 0.0;
                case ScaleForm::Takagi:
                    return std::exp2(-static_cast<double>(L));
                case ScaleForm::TakagiLog:
                    // sum_{n >= L+1} n 2^-n = (L+2) 2^-L
                    return (L + 2.0) * std::exp2(-static_cast<double>(L));
                case ScaleForm::SqrtBridge:
                    return std::exp2(-0.5 * (L + 1.0)) / (1.0 - std::exp2(-0.5));
                case ScaleForm::Power:
                    return std::exp2(-im.scale.beta * (L + 1.0)) / (1.0 - std::exp2(-im.scale.beta));
                case ScaleForm::NonHoelder:
                    return zeta2_tail_from(L + 2);
                case ScaleForm::Custom:
                    return numeric_tail(im.scale, L, nullptr);
            }
            return 0.0;
        case Kind::Explicit: {
            double acc = 0.0;
            for (std::size_t n = static_cast<std::size_t>(std::max(L + 1, 0)); n < im.row_abs_max.size(); ++n) {
                acc += im.row_abs_max[n];
            }
            return acc;
        }
        case Kind::Lacunary: {
            double acc = 0.0;
            for (int n : im.levels) {
                if (n > L) acc += std::abs(im.scale.value(n));
            }
            return acc;
        }
        case Kind::Random:
            return numeric_tail(im.scale, L, random_envelope);
    }
    return 0.0;
}

int CoefficientSchedule::max_nonzero_level() const noexcept {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::PerLevel:
            return im.scale.form == ScaleForm::Zero ? -1 : std::numeric_limits<int>::max();
        case Kind::Explicit:
            return static_cast<int>(im.rows.size()) - 1;
        case Kind::Lacunary:
            return im.levels.back();
        case Kind::Random:
            return std::numeric_limits<int>::max();
    }
    return -1;
}

int CoefficientSchedule::explicit_depth() const {
    if (!is_explicit()) throw std::logic_error("explicit_depth: schedule is not Explicit");
    return static_cast<int>(impl_->rows.size()) - 1;
}

const std::vector<std::vector<double>>& CoefficientSchedule::rows() const {
    if (!is_explicit()) throw std::logic_error("rows: schedule is not Explicit");
    return impl_->rows;
}

const std::vector<int>& CoefficientSchedule::lacunary_levels() const {
    if (kind() != Kind::Lacunary) throw std::logic_error("lacunary_levels: schedule is not Lacunary");
    return impl_->levels;
}

std::uint64_t CoefficientSchedule::seed() const {
    if (kind() != Kind::Random) throw std::logic_error("seed: schedule is not Random");
    return impl_->seed;
}

CoefficientSchedule named_schedule(const std::string& name, double beta, const std::vector<int>& levels) {
    auto make = [](ScaleForm form, double b = 0.0) {
        auto impl = std::make_shared<CoefficientSchedule::Impl>();
        impl->kind = CoefficientSchedule::Kind::PerLevel;
        impl->scale.form = form;
        impl->scale.beta = b;
        return CoefficientSchedule(std::move(impl));
    };
    if (name == "zero") return make(ScaleForm::Zero);
    if (name == "takagi") return make(ScaleForm::Takagi);
    if (name == "takagi_log") return make(ScaleForm::TakagiLog);
    if (name == "sqrt_bridge") return make(ScaleForm::SqrtBridge);
    if (name == "nonhoelder") return make(ScaleForm::NonHoelder);
    if (name == "power") {
        if (!(beta > 0.0)) throw std::invalid_argument("named_schedule: power requires beta > 0");
        return make(ScaleForm::Power, beta);
    }
    if (name == "lacunary") {
        if (levels.empty()) throw std::invalid_argument("named_schedule: lacunary requires a level list");
        return CoefficientSchedule::lacunary(levels, [](int n) { return std::exp2(-static_cast<double>(n)); });
    }
    throw std::invalid_argument("named_schedule: unknown schedule '" + name + "'");
}

CoefficientSchedule bridge_schedule(std::uint64_t seed) {
    return CoefficientSchedule::random_normal(
        [](int n) { return std::exp2(-0.5 * static_cast<double>(n)); }, seed);
}

CoefficientSchedule materialize_explicit(const CoefficientSchedule& schedule, int depth,
                                         std::int64_t max_entries) {
    if (depth < 0) throw std::invalid_argument("materialize_explicit: negative depth");
    const std::int64_t entries = (std::int64_t{1} << (depth + 1)) - 1;
    if (entries > max_entries) {
        throw std::invalid_argument("materialize_explicit: table of depth " + std::to_string(depth) +
                                    " exceeds the entry budget");
    }
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(depth) + 1);
    for (int n = 0; n <= depth; ++n) {
        rows[n].resize(static_cast<std::size_t>(positions_at_level(n)));
        for (std::int64_t i = 0; i < positions_at_level(n); ++i) {
            rows[n][static_cast<std::size_t>(i)] = schedule.gamma(n, i);
        }
    }
    return CoefficientSchedule::explicit_table(std::move(rows));
}

} // namespace schauder
