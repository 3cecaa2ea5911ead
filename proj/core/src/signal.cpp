#include "flexmotion/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"

namespace flexmotion {

std::complex<double> Biquad::response(std::complex<double> z) const {
  const auto zi = 1.0 / z;
  const auto zi2 = zi * zi;
  return (b0 + b1 * zi + b2 * zi2) / (1.0 + a1 * zi + a2 * zi2);
}

bool Biquad::stable() const {
  // Jury conditions for z^2 + a1 z + a2.
  return std::abs(a2) < 1.0 && std::abs(a1) < 1.0 + a2;
}

std::complex<double> FilterDesign::response(double frequency) const {
  const double w = 2.0 * std::numbers::pi * frequency / rate;
  const auto z = std::polar(1.0, w);
  std::complex<double> h{1.0, 0.0};
  for (const auto& s : sections) h *= s.response(z);
  return h;
}

double FilterDesign::magnitude(double frequency) const {
  return std::abs(response(frequency));
}

FilterDesign design_butterworth(int order, double cutoff, double rate) {
  if (order < 2 || order > 8 || order % 2 != 0) {
    throw Error(ErrorKind::invalid_filter_order,
                "butterworth: order must be one of 2, 4, 6, 8, got " +
                    std::to_string(order));
  }
  if (!(rate > 0.0) || !(cutoff > 0.0)) {
    throw Error(ErrorKind::non_positive_input,
                "butterworth: cutoff and rate must be positive");
  }
  if (!(cutoff < 0.5 * rate)) {
    throw Error(ErrorKind::cutoff_above_nyquist,
                "butterworth: cutoff " + format_number(cutoff) +
                    " Hz is not below Nyquist " + format_number(0.5 * rate) +
                    " Hz");
  }

  FilterDesign design;
  design.order = order;
  design.cutoff = cutoff;
  design.rate = rate;

  // Prewarped analog cutoff, normalized so the bilinear map reads
  // s = (z - 1) / (K (z + 1)).
  const double K = std::tan(std::numbers::pi * cutoff / rate);
  const double K2 = K * K;
  for (int i = 0; i < order / 2; ++i) {
    const double theta =
        std::numbers::pi * (2.0 * i + 1.0) / (2.0 * static_cast<double>(order));
    const double d = 2.0 * std::sin(theta);  // s^2 + d s + 1
    const double norm = 1.0 / (1.0 + d * K + K2);
    Biquad s{};
    s.b0 = K2 * norm;
    s.b1 = 2.0 * s.b0;
    s.b2 = s.b0;
    s.a1 = 2.0 * (K2 - 1.0) * norm;
    s.a2 = (1.0 - d * K + K2) * norm;
    design.sections.push_back(s);
  }
  return design;
}

namespace {

struct SectionState {
  double s1 = 0.0;
  double s2 = 0.0;
};

// Transposed direct form II state that a section reaches after a long run of
// constant input `level`.
std::vector<SectionState> steady_state(const FilterDesign& design,
                                       double level) {
  std::vector<SectionState> states;
  double input = level;
  for (const auto& s : design.sections) {
    const double gain = (s.b0 + s.b1 + s.b2) / (1.0 + s.a1 + s.a2);
    SectionState st;
    st.s2 = (s.b2 - s.a2 * gain) * input;
    st.s1 = (s.b1 - s.a1 * gain) * input + st.s2;
    states.push_back(st);
    input *= gain;
  }
  return states;
}

void run_cascade(const FilterDesign& design, std::vector<SectionState> states,
                 std::vector<double>& data) {
  for (std::size_t j = 0; j < design.sections.size(); ++j) {
    const auto& c = design.sections[j];
    auto& st = states[j];
    for (double& x : data) {
      const double y = c.b0 * x + st.s1;
      st.s1 = c.b1 * x - c.a1 * y + st.s2;
      st.s2 = c.b2 * x - c.a2 * y;
      x = y;
    }
  }
}

}  // namespace

std::vector<double> filter_once(const FilterDesign& design,
                                const std::vector<double>& input) {
  std::vector<double> out = input;
  run_cascade(design, std::vector<SectionState>(design.sections.size()), out);
  return out;
}

TimeSeries filtfilt(const FilterDesign& design, const TimeSeries& series) {
  if (std::abs(series.rate - design.rate) > 1e-9 * design.rate) {
    throw Error(ErrorKind::rate_mismatch,
                "filtfilt: series rate " + format_number(series.rate) +
                    " Hz differs from design rate " +
                    format_number(design.rate) + " Hz");
  }
  const std::size_t pad = 3 * static_cast<std::size_t>(design.settle_length());
  const std::size_t n = series.size();
  if (n <= pad) {
    throw Error(ErrorKind::series_too_short,
                "filtfilt: need more than " + std::to_string(pad) +
                    " samples, got " + std::to_string(n));
  }
  const auto& x = series.values;

  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) {
    ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);
  }

  run_cascade(design, steady_state(design, ext.front()), ext);
  std::reverse(ext.begin(), ext.end());
  run_cascade(design, steady_state(design, ext.front()), ext);
  std::reverse(ext.begin(), ext.end());

  TimeSeries out;
  out.rate = series.rate;
  out.t0 = series.t0;
  out.values.assign(ext.begin() + static_cast<std::ptrdiff_t>(pad),
                    ext.begin() + static_cast<std::ptrdiff_t>(pad + n));
  return out;
}

TimeSeries load_trace(std::istream& in) {
  const CsvTable table = read_csv(in);
  if (table.header.size() != 2 || table.header[0] != "t") {
    throw Error(ErrorKind::malformed_csv,
                "trace: expected header 't,<value>'");
  }
  const auto& rows = table.rows;
  if (rows.size() < 2) {
    throw Error(ErrorKind::too_few_rows,
                "trace: need at least 2 rows, got " +
                    std::to_string(rows.size()));
  }
  std::vector<double> steps;
  steps.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    steps.push_back(rows[i][0] - rows[i - 1][0]);
  }
  std::vector<double> sorted = steps;
  const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
  std::nth_element(sorted.begin(), mid, sorted.end());
  const double median = *mid;
  if (!(median > 0.0)) {
    throw Error(ErrorKind::non_uniform_sampling,
                "trace: time column is not increasing");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (std::abs(steps[i] - median) > 1e-3 * median) {
      throw Error(ErrorKind::non_uniform_sampling,
                  "trace: step " + format_number(steps[i]) + " at row " +
                      std::to_string(i + 2) + " deviates from median " +
                      format_number(median) + " by more than 0.1%");
    }
  }

  // The span estimate, rounded to the precision the file was written with,
  // recovers the writer's rate exactly for exported traces.
  const double span = rows.back()[0] - rows.front()[0];
  const double rate_estimate = static_cast<double>(rows.size() - 1) / span;

  TimeSeries series;
  series.rate = std::strtod(format_number(rate_estimate).c_str(), nullptr);
  series.t0 = rows.front()[0];
  series.values.reserve(rows.size());
  for (const auto& r : rows) series.values.push_back(r[1]);
  return series;
}

TimeSeries load_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::io_failure, "cannot open trace '" + path + "'");
  }
  return load_trace(in);
}

std::string trace_column_name(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return {};
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto comma = line.find(',');
  if (comma == std::string::npos || line.substr(0, comma) != "t") return {};
  return line.substr(comma + 1);
}

}  // namespace flexmotion
