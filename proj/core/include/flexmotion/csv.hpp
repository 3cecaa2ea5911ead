#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace flexmotion {

/// Number formatting shared by every CSV writer: 12 significant digits,
/// shortest of fixed/scientific (printf "%.12g").
std::string format_number(double value);

/// Numeric CSV with a single header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t column(std::string_view name) const;  // throws if absent
};

/// Parses a header plus numeric rows. Blank lines are skipped. Throws
/// Error(malformed_csv) on ragged rows and Error(non_numeric_cell) on a cell
/// that is not a complete floating-point literal.
CsvTable read_csv(std::istream& in);

void write_csv_row(std::ostream& out, const std::vector<double>& row);
void write_csv_header(std::ostream& out, const std::vector<std::string>& names);

}  // namespace flexmotion
