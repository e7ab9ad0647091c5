#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schauder {

/// Samples of a function on the dyadic grid j/2^M, j = 0..2^M.
struct SampleGrid {
    int level = 0;
    std::vector<double> values;  // exactly 2^level + 1 entries, all finite

    double x_of(std::size_t j) const;
    std::size_t size() const { return values.size(); }

    /// CSV with header `x,value`, rows in increasing x, 17 significant digits.
    void write_csv(std::ostream& out) const;
    static SampleGrid read_csv(std::istream& in);
};

/// Throws std::invalid_argument unless values.size() == 2^level + 1 and all
/// entries are finite.
void validate(const SampleGrid& grid);

} // namespace schauder
