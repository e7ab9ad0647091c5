#pragma once

#include "schauder/basis.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace schauder {

/// Rule assigning a coefficient gamma_{n,i} to every basis index.
///
/// Four variants:
///   PerLevel  - gamma_{n,i} = c(n) for all i
///   Explicit  - finite table covering levels 0..depth contiguously
///   Lacunary  - scale(n) on a sparse increasing list of levels, 0 elsewhere
///   Random    - scale(n) * xi_{n,i} with xi i.i.d. standard normal, drawn
///               from a counter-based generator keyed (seed, n, i) so the
///               table is identical for the same seed at any depth and
///               independent of evaluation order.
///
/// Immutable after construction; cheap to copy (shared payload).
class CoefficientSchedule {
public:
    enum class Kind { PerLevel, Explicit, Lacunary, Random };

    CoefficientSchedule();  // zero schedule

    static CoefficientSchedule zero();
    static CoefficientSchedule per_level(std::function<double(int)> c);
    static CoefficientSchedule explicit_table(std::vector<std::vector<double>> rows);
    static CoefficientSchedule lacunary(std::vector<int> levels, std::function<double(int)> scale);
    static CoefficientSchedule random_normal(std::function<double(int)> scale, std::uint64_t seed);

    Kind kind() const noexcept;

    double gamma(int level, std::int64_t pos) const;
    double gamma(BasisIndex idx) const { return gamma(idx.level, idx.pos); }

    /// Majorant of Delta_n = max_i |gamma_{n,i}|. Exact for PerLevel,
    /// Explicit and Lacunary; for Random it is the configured
    /// high-probability envelope |scale(n)| * (sqrt(2 (n+1) ln 2) + 4).
    double level_abs_max(int level) const;

    /// Upper bound on sum_{n > from_level} Delta_n. Closed form for the
    /// named per-level schedules, exact finite sums for Explicit and
    /// Lacunary, numeric with a convergence guard otherwise. Throws
    /// std::domain_error when the majorant series does not converge.
    double tail_sup(int from_level) const;

    /// Deepest level carrying a coefficient (-1 for the zero schedule,
    /// INT_MAX when every level does).
    int max_nonzero_level() const noexcept;

    /// Explicit-only accessors.
    bool is_explicit() const noexcept { return kind() == Kind::Explicit; }
    int explicit_depth() const;                       // throws if not Explicit
    const std::vector<std::vector<double>>& rows() const;  // throws if not Explicit

    /// Lacunary-only: the sparse level list.
    const std::vector<int>& lacunary_levels() const;  // throws if not Lacunary

    std::uint64_t seed() const;                        // throws if not Random

private:
    struct Impl;
    explicit CoefficientSchedule(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;

    friend CoefficientSchedule named_schedule(const std::string&, double, const std::vector<int>&);
};

/// Closed-form schedules from the worked examples:
///   takagi       2^-n          takagi_log   n 2^-n
///   sqrt_bridge  2^-(n/2)      nonhoelder   (1+n)^-2
///   power        2^-(beta n), beta > 0 (passed via `beta`)
///   lacunary     2^-(n_k) on the given strictly increasing levels
///   zero         identically 0
/// Throws std::invalid_argument on an unknown name or bad parameters.
CoefficientSchedule named_schedule(const std::string& name, double beta = 0.0,
                                   const std::vector<int>& levels = {});

/// Random schedule with scale 2^-(n/2) used for Brownian-bridge sampling.
CoefficientSchedule bridge_schedule(std::uint64_t seed);

/// Enumerate a schedule into an Explicit table of the given depth.
/// Throws std::invalid_argument when the table would exceed `max_entries`.
CoefficientSchedule materialize_explicit(const CoefficientSchedule& schedule, int depth,
                                         std::int64_t max_entries = (std::int64_t{1} << 23));

} // namespace schauder
