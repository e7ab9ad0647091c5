#pragma once

#include "schauder/schedule.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace schauder {

/// Per-level extremes of |gamma|: delta_n = min_i, Delta_n = max_i.
struct LevelExtremes {
    std::vector<double> delta;
    std::vector<double> Delta;

    int depth() const { return static_cast<int>(delta.size()) - 1; }

    /// CSV `n,delta,Delta`.
    void write_csv(std::ostream& out) const;
};

/// Exact per-level min/max of |gamma| through `depth`. PerLevel and
/// Lacunary schedules are closed-form; Explicit and Random tables are
/// enumerated (Random therefore requires 2^depth within the entry budget).
LevelExtremes level_extremes(const CoefficientSchedule& schedule, int depth);

struct ExponentBounds {
    double alpha0 = 0.0;          // liminf surrogate of -log2(Delta_n)/n
    double alpha1 = 0.0;          // same with delta_n; alpha0 <= alpha1
    bool alpha1_infinite = false; // some delta_n = 0 in the window (lacunary case)
    bool alpha0_infinite = false;
    std::string note;
};

/// liminf estimated as the minimum of -log2(.)/n over the final
/// ceil(window_fraction * depth) levels (level 0 never enters).
/// Requires depth >= 8 and window_fraction in (0, 1].
ExponentBounds exponent_bounds(const LevelExtremes& extremes, double window_fraction = 0.5);

/// Windowed limsup surrogate of 2^(alpha n) delta_n: the maximum over the
/// deepest half of the first `depth+1` levels.
double probe_max_windowed(const LevelExtremes& extremes, double alpha, int depth);

/// Growth of the windowed probe between half depth and full depth;
/// values >> 1 indicate limsup 2^(alpha n) delta_n = infinity behavior
/// observable at this depth.
double probe_growth_ratio(const LevelExtremes& extremes, double alpha);

struct RegularityReport {
    LevelExtremes extremes;
    int depth = 0;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    bool alpha1_infinite = false;
    bool alpha0_infinite = false;

    double everywhere_hoelder_below = 0.0;        // = alpha0
    double nowhere_one_sided_hoelder_above = 0.0; // = alpha1
    bool completely_non_hoelder = false;
    bool girgensohn_no_one_sided_derivative = false;
    bool conclusive = false;                      // false when depth is too small

    /// probe grid alpha = 0.05, 0.10, ..., 1.00 and the growth ratio of the
    /// windowed max of 2^(alpha n) delta_n from half depth to full depth.
    std::vector<double> probe_alphas;
    std::vector<double> probe_growth;

    std::string note;

    /// Flat key-value rendering.
    std::string to_text() const;
};

/// Classify regularity from per-level extremes.
///
/// completely_non_hoelder: all delta_n > 0 over the deepest half AND the
/// alpha1 estimate shrinks by a factor <= 0.8 when the depth doubles from
/// depth/2 to depth (the finite-depth signature of liminf -log2(delta_n)/n
/// = 0, which schedules with a genuine positive Hoelder exponent cannot
/// show). girgensohn flag: the alpha = 1 probe 2^n delta_n grows by >= 4x
/// from half depth to full depth, which certifies "nowhere a finite
/// one-sided derivative" through the alpha = 1 criterion.
/// Verdicts are reported together with the depth; they are evidence at a
/// depth, never a proof. Depth < 16 is flagged inconclusive.
RegularityReport classify(const LevelExtremes& extremes);

/// min over branches of max over the branch of 2^(alpha n) |gamma_{n,i_n}|,
/// the finite-depth surrogate of the every-branch limsup criterion:
/// V(n,i) = max(2^(alpha n)|gamma_{n,i}|, min(V(n+1,2i), V(n+1,2i+1))),
/// V(depth+1, .) = 0. Explicit/Random tables are enumerated (depth <= 22);
/// PerLevel schedules reduce to max_n 2^(alpha n)|c(n)|.
double branch_criterion(const CoefficientSchedule& schedule, int depth, double alpha);

} // namespace schauder
