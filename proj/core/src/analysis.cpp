#include "schauder/analysis.hpp"

#include "schauder/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schauder {

AnalyzedSeries analyze(const SampleGrid& grid) {
    validate(grid);
    if (grid.level < 1) throw std::invalid_argument("analyze: grid level must be >= 1");
    const int M = grid.level;
    const auto& v = grid.values;

    AnalyzedSeries out;
    out.a = v.front();
    out.b = v.back() - v.front();

    std::vector<std::vector<double>> rows(static_cast<std::size_t>(M));
    for (int n = 0; n < M; ++n) {
        const std::size_t stride = std::size_t{1} << (M - n);  // grid step of one level-n cell
        const std::size_t half = stride / 2;
        auto& row = rows[static_cast<std::size_t>(n)];
        row.resize(std::size_t{1} << n);
        for (std::size_t i = 0; i < row.size(); ++i) {
            const std::size_t l = i * stride;
            row[i] = v[l + half] - 0.5 * (v[l] + v[l + stride]);
        }
    }
    out.table = CoefficientSchedule::explicit_table(std::move(rows));
    return out;
}

void AnalyzedSeries::write_csv(std::ostream& out) const {
    out << "n,i,gamma\n";
    const auto& rows = table.rows();
    for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t i = 0; i < rows[n].size(); ++i) {
            out << n << ',' << i << ',' << format17(rows[n][i]) << '\n';
        }
    }
}

CoefficientSchedule read_coefficient_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "n,i,gamma") {
        throw std::runtime_error("coefficient csv: missing `n,i,gamma` header");
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        if (!std::getline(ss, field, ',')) throw std::runtime_error("coefficient csv: malformed row");
        const int n = std::stoi(field);
        if (!std::getline(ss, field, ',')) throw std::runtime_error("coefficient csv: malformed row");
        const std::int64_t i = std::stoll(field);
        if (!std::getline(ss, field)) throw std::runtime_error("coefficient csv: malformed row");
        const double g = std::stod(field);
        if (n < 0 || n > 30 || i < 0 || i >= (std::int64_t{1} << n)) {
            throw std::runtime_error("coefficient csv: index out of range");
        }
        if (static_cast<std::size_t>(n) >= rows.size()) {
            const std::size_t old = rows.size();
            rows.resize(static_cast<std::size_t>(n) + 1);
            for (std::size_t m = old; m < rows.size(); ++m) {
                rows[m].assign(std::size_t{1} << m, 0.0);
            }
        }
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = g;
    }
    return CoefficientSchedule::explicit_table(std::move(rows));
}

} // namespace schauder
