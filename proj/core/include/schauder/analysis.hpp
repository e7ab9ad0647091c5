#pragma once

#include "schauder/grid.hpp"
#include "schauder/schedule.hpp"

#include <iosfwd>

namespace schauder {

/// Faber-Schauder coefficients read off a sample grid.
struct AnalyzedSeries {
    double a = 0.0;                // f(0)
    double b = 0.0;                // f(1) - f(0)
    CoefficientSchedule table;     // Explicit, depth M-1

    /// CSV `n,i,gamma`, 17 significant digits.
    void write_csv(std::ostream& out) const;
};

/// Unique expansion coefficients of the grid's function through level M-1:
/// a = f(0), b = f(1) - f(0),
/// gamma_{n,i} = f((2i+1)/2^{n+1}) - (f(i/2^n) + f((i+1)/2^n)) / 2.
/// The midpoint second difference is exact on truncated series, making
/// synthesize-then-analyze a round trip. Requires grid level >= 1.
AnalyzedSeries analyze(const SampleGrid& grid);

/// Parse a `n,i,gamma` CSV back into an Explicit schedule.
CoefficientSchedule read_coefficient_csv(std::istream& in);

} // namespace schauder
