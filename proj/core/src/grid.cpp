#include "schauder/grid.hpp"

#include "schauder/io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schauder {

double SampleGrid::x_of(std::size_t j) const {
    return std::ldexp(static_cast<double>(j), -level);
}

void validate(const SampleGrid& grid) {
    if (grid.level < 0 || grid.level > 52) {
        throw std::invalid_argument("SampleGrid: level out of range");
    }
    const std::size_t expected = (std::size_t{1} << grid.level) + 1;
    if (grid.values.size() != expected) {
        throw std::invalid_argument("SampleGrid: expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(grid.values.size()));
    }
    for (double v : grid.values) {
        if (!std::isfinite(v)) throw std::invalid_argument("SampleGrid: non-finite value");
    }
}

void SampleGrid::write_csv(std::ostream& out) const {
    out << "x,value\n";
    for (std::size_t j = 0; j < values.size(); ++j) {
        out << format17(x_of(j)) << ',' << format17(values[j]) << '\n';
    }
}

SampleGrid SampleGrid::read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,value") {
        throw std::runtime_error("SampleGrid: missing `x,value` header");
    }
    std::vector<double> vals;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("SampleGrid: malformed row: " + line);
        vals.push_back(std::stod(line.substr(comma + 1)));
    }
    if (vals.size() < 2) throw std::runtime_error("SampleGrid: too few rows");
    int level = 0;
    while ((std::size_t{1} << level) + 1 < vals.size() && level < 53) ++level;
    SampleGrid grid{level, std::move(vals)};
    validate(grid);
    return grid;
}

} // namespace schauder
