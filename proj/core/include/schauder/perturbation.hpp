#pragma once

#include "schauder/scan.hpp"

#include <optional>

namespace schauder {

/// g(x) = f(x) + eps * sin(100 (eps/3)^-n x). The frequency is at least
/// 300, so a full period fits in [0,1] and sup |g - f| = eps.
/// Throws unless eps > 0 and n >= 1.
Evaluator escape_perturbation(Evaluator f, double eps, int n);

struct AnMembership {
    bool member = false;
    /// A probe violating |f(x0) - f(y)| < |y - x0|^(1/n) on the side that
    /// came closer to passing; empty when member.
    std::optional<double> witness_y;
};

/// Membership of x0 in the one-sided small-increment set: true iff on at
/// least one side every probed y with 0 < |y - x0| < 1/n satisfies
/// |f(x0) - f(y)| < |y - x0|^(1/n). Probes are log-spaced down to 1e-12/n
/// so that high-frequency perturbations are visible. A side with no
/// admissible y (x0 at the boundary) counts as satisfied.
AnMembership an_membership_test(const Evaluator& f, int n, double x0, int probes_per_side = 1024);

} // namespace schauder
