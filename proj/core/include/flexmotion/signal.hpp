#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "flexmotion/series.hpp"

namespace flexmotion {

/// One second-order section, a0 normalized to 1:
///   H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct Biquad {
  double b0, b1, b2;
  double a1, a2;

  std::complex<double> response(std::complex<double> z) const;
  bool stable() const;
};

struct FilterDesign {
  int order = 0;
  double cutoff = 0.0;  ///< [Hz]
  double rate = 0.0;    ///< [Hz]
  std::vector<Biquad> sections;

  std::complex<double> response(double frequency) const;
  double magnitude(double frequency) const;
  /// Minimum input length accepted by filtfilt is 3 * settle_length() + 1.
  int settle_length() const noexcept { return order; }
};

/// Lowpass Butterworth of even order in {2,4,6,8}, bilinear transform with
/// prewarping, realized as order/2 cascaded sections.
FilterDesign design_butterworth(int order, double cutoff, double rate);

/// Single forward pass through the cascade with zero initial state.
std::vector<double> filter_once(const FilterDesign& design,
                                const std::vector<double>& input);

/// Forward-backward (zero-phase) filtering. Ends are extended by odd
/// reflection of 3 * order samples and each pass starts from the cascade's
/// steady state for the first extended sample.
TimeSeries filtfilt(const FilterDesign& design, const TimeSeries& series);

/// Reads `t,<value>` CSV. The rate is recovered from the time column, which
/// must be uniform within 0.1% of the median step.
TimeSeries load_trace(std::istream& in);
TimeSeries load_trace_file(const std::string& path);

/// Value column name of a `t,<value>` file; empty if the header is malformed.
std::string trace_column_name(std::istream& in);

}  // namespace flexmotion
