#include "flexmotion/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"
#include "flexmotion/quadrature.hpp"

namespace flexmotion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::non_positive_input,
                std::string(name) + " must be positive and finite, got " +
                    format_number(value));
  }
}

void check_time(const MotionSpec& spec, double t) {
  if (!(t >= 0.0 && t <= spec.t1())) {
    throw Error(ErrorKind::time_out_of_range,
                "t = " + format_number(t) + " outside [0, " +
                    format_number(spec.t1()) + "]");
  }
}

}  // namespace

MotionSpec MotionSpec::make(double L, double k, double n, double m,
                            PlanMode mode) {
  require_positive(L, "L");
  require_positive(k, "k");
  require_positive(m, "m");
  if (!std::isfinite(n)) {
    throw Error(ErrorKind::non_positive_input, "n must be finite");
  }
  if (n == 1.0) {
    throw Error(ErrorKind::resonant_multiple,
                "resonant multiple: n = 1 puts the forcing at p = k");
  }
  if (n < 1.0) {
    throw Error(ErrorKind::super_resonant_multiple,
                "super-resonant multiple: n = " + format_number(n) +
                    " forces above the natural frequency");
  }
  if (mode == PlanMode::strict) {
    if (n != std::floor(n)) {
      throw Error(ErrorKind::non_integer_multiple,
                  "non-integer multiple n = " + format_number(n) +
                      " needs exploratory mode");
    }
  }
  return MotionSpec(L, k, n, m, mode);
}

double MotionSpec::tc() const noexcept { return kTwoPi / k_; }
double MotionSpec::t1() const noexcept { return kTwoPi * n_ / k_; }
double MotionSpec::accel_amplitude() const noexcept {
  const double p = this->p();
  return L_ * p * p / kTwoPi;
}

double position(const MotionSpec& spec, double t) {
  check_time(spec, t);
  const double pt = spec.p() * t;
  return spec.L() / kTwoPi * (pt - std::sin(pt));
}

double velocity(const MotionSpec& spec, double t) {
  check_time(spec, t);
  const double p = spec.p();
  return spec.L() * p / kTwoPi * (1.0 - std::cos(p * t));
}

double acceleration(const MotionSpec& spec, double t) {
  check_time(spec, t);
  return spec.accel_amplitude() * std::sin(spec.p() * t);
}

MotionSample sample_at(const MotionSpec& spec, double t) {
  return {t, position(spec, t), velocity(spec, t), acceleration(spec, t)};
}

std::vector<MotionSample> sample_uniform(const MotionSpec& spec, double rate) {
  require_positive(rate, "rate");
  const double t1 = spec.t1();
  const auto count = static_cast<std::size_t>(std::floor(rate * t1)) + 1;
  std::vector<MotionSample> samples;
  samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // floor() can admit i / rate a hair above t1 when rate * t1 is integral
    // up to rounding.
    const double t = std::min(static_cast<double>(i) / rate, t1);
    samples.push_back(sample_at(spec, t));
  }
  return samples;
}

MomentIntegrals moment_integrals(const MotionSpec& spec, double step) {
  const double t1 = spec.t1();
  if (!(step > 0.0)) step = t1 / 1e5;
  const double k = spec.k();
  const double p = spec.p();
  const double amp = spec.accel_amplitude();
  const double vamp = spec.L() * p / kTwoPi;
  auto u = [&](double t) { return amp * std::sin(p * t); };

  MomentIntegrals out{};
  out.accel = simpson(u, 0.0, t1, step);
  out.velocity = simpson(
      [&](double t) { return vamp * (1.0 - std::cos(p * t)); }, 0.0, t1, step);
  out.accel_cos_kt = simpson(
      [&](double t) { return u(t) * std::cos(k * t); }, 0.0, t1, step);
  out.accel_sin_kt = simpson(
      [&](double t) { return u(t) * std::sin(k * t); }, 0.0, t1, step);
  return out;
}

std::pair<double, double> timing_residual(double n) {
  const double frac = n - std::floor(n);
  if (frac == 0.0) return {0.0, 0.0};
  const double angle = kTwoPi * frac;
  return {std::cos(angle) - 1.0, std::sin(angle)};
}

void write_setpoints_csv(std::ostream& out,
                         const std::vector<MotionSample>& samples) {
  write_csv_header(out, {"t", "s", "v", "a"});
  for (const auto& s : samples) write_csv_row(out, {s.t, s.s, s.v, s.a});
}

}  // namespace flexmotion
