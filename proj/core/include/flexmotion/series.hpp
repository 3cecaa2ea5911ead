#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace flexmotion {

/// Uniformly sampled scalar signal: values[i] is taken at t0 + i / rate.
struct TimeSeries {
  double rate = 1.0;
  double t0 = 0.0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double time(std::size_t i) const noexcept {
    return t0 + static_cast<double>(i) / rate;
  }
};

/// Writes `t,<column>` CSV with 12 significant digits.
void write_series_csv(std::ostream& out, const TimeSeries& series,
                      const std::string& column);

}  // namespace flexmotion
