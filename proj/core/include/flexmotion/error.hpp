#pragma once

#include <stdexcept>
#include <string>

namespace flexmotion {

// Every validation failure carries a distinct kind so callers (and the CLI)
// can map it to a specific diagnostic.
enum class ErrorKind {
  non_positive_input,
  non_integer_multiple,
  resonant_multiple,
  super_resonant_multiple,
  time_out_of_range,
  step_too_coarse,
  incomplete_trace,
  invalid_filter_order,
  cutoff_above_nyquist,
  rate_mismatch,
  series_too_short,
  non_uniform_sampling,
  too_few_rows,
  non_numeric_cell,
  malformed_csv,
  invalid_config,
  io_failure,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flexmotion
