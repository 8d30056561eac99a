#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hermlag/approx.hpp"
#include "hermlag/quad.hpp"

namespace hermlag {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double x);

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(std::ostream& os, const Table& t);
/// Cells come back as strings; lines starting with '#' are skipped.
std::vector<std::vector<std::string>> read_csv(std::istream& is, std::vector<std::string>* header = nullptr);

Table rule_table(const QuadratureRule& rule);

/// "# {json header}" line, then "n,coeff" rows.
void write_expansion(std::ostream& os, const Expansion& e);
Expansion read_expansion(std::istream& is);

}  // namespace hermlag
