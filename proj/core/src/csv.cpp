#include "flexmotion/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "flexmotion/error.hpp"
#include "flexmotion/series.hpp"

namespace flexmotion {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::non_positive_input: return "non-positive input";
    case ErrorKind::non_integer_multiple: return "non-integer multiple";
    case ErrorKind::resonant_multiple: return "resonant multiple";
    case ErrorKind::super_resonant_multiple: return "super-resonant multiple";
    case ErrorKind::time_out_of_range: return "time out of range";
    case ErrorKind::step_too_coarse: return "step too coarse";
    case ErrorKind::incomplete_trace: return "incomplete trace";
    case ErrorKind::invalid_filter_order: return "invalid filter order";
    case ErrorKind::cutoff_above_nyquist: return "cutoff above Nyquist";
    case ErrorKind::rate_mismatch: return "rate mismatch";
    case ErrorKind::series_too_short: return "series too short";
    case ErrorKind::non_uniform_sampling: return "non-uniform sampling";
    case ErrorKind::too_few_rows: return "too few rows";
    case ErrorKind::non_numeric_cell: return "non-numeric cell";
    case ErrorKind::malformed_csv: return "malformed csv";
    case ErrorKind::invalid_config: return "invalid config";
    case ErrorKind::io_failure: return "i/o failure";
  }
  return "unknown";
}

std::string format_number(double value) {
  char buf[40];
  // -0 would not survive a round trip through some plotters; print 0.
  if (value == 0.0) value = 0.0;
  const int len = std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorKind::malformed_csv,
              "csv: missing column '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (table.header.empty()) {
      for (auto c : cells) table.header.emplace_back(c);
      continue;
    }
    if (cells.size() != table.header.size()) {
      throw Error(ErrorKind::malformed_csv,
                  "csv: line " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(table.header.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (auto c : cells) {
      double v = 0.0;
      const char* first = c.data();
      const char* last = c.data() + c.size();
      if (!c.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (c.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorKind::non_numeric_cell,
                    "csv: non-numeric cell '" + std::string(c) + "' on line " +
                        std::to_string(line_no));
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.header.empty()) {
    throw Error(ErrorKind::malformed_csv, "csv: missing header");
  }
  return table;
}

void write_csv_header(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ',';
    out << names[i];
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, const std::vector<double>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << format_number(row[i]);
  }
  out << '\n';
}

void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::string& column) {
  write_csv_header(out, {"t", column});
  for (std::size_t i = 0; i < series.size(); ++i) {
    write_csv_row(out, {series.time(i), series.values[i]});
  }
}

}  // namespace flexmotion
