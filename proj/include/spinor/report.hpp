#ifndef SPINOR_REPORT_HPP
#define SPINOR_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spinor {

// Canonical float formatting for every report: 12 significant digits,
// scientific notation iff |v| < 1e-3 or |v| >= 1e6. Byte-deterministic.
std::string format_real(double v);
std::string format_int(uint64_t v);
std::string format_int(int64_t v);

// A flat report table. Cells carry their own text; `quoted` controls JSON
// emission (false = raw numeral).
struct Cell {
    std::string text;
    bool quoted;
};

Cell num_cell(double v);
Cell int_cell(uint64_t v);
Cell str_cell(std::string s);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

} // namespace spinor

#endif
