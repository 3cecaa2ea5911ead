#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace flexmotion {

/// Strict plans must use an integer period multiple n >= 2 and are the only
/// ones that can be reported quiescent. Exploratory plans accept any real
/// n > 1 and exist for sweeps and unmatched comparisons.
enum class PlanMode { strict, exploratory };

/// Point-to-point move of a flexible payload: travel L, payload natural
/// frequency k [rad/s], period multiple n = t1 / tc and payload mass m.
///
/// The acceleration law is a single full sine period at p = k / n, so the
/// whole move lasts t1 = 2*pi / p = n * tc.
class MotionSpec {
 public:
  static MotionSpec make(double L, double k, double n, double m,
                         PlanMode mode = PlanMode::strict);

  double L() const noexcept { return L_; }
  double k() const noexcept { return k_; }
  double n() const noexcept { return n_; }
  double m() const noexcept { return m_; }
  PlanMode mode() const noexcept { return mode_; }
  bool strict() const noexcept { return mode_ == PlanMode::strict; }

  /// Forcing frequency p = k / n.
  double p() const noexcept { return k_ / n_; }
  /// Natural period tc = 2*pi / k.
  double tc() const noexcept;
  /// Total motion time t1 = 2*pi / p.
  double t1() const noexcept;
  /// Control amplitude L * p^2 / (2*pi).
  double accel_amplitude() const noexcept;

 private:
  MotionSpec(double L, double k, double n, double m, PlanMode mode)
      : L_(L), k_(k), n_(n), m_(m), mode_(mode) {}

  double L_;
  double k_;
  double n_;
  double m_;
  PlanMode mode_;
};

/// Convenience wrapper matching the free-function style used elsewhere.
inline MotionSpec make_spec(double L, double k, double n, double m,
                            PlanMode mode = PlanMode::strict) {
  return MotionSpec::make(L, k, n, m, mode);
}

struct MotionSample {
  double t;
  double s;
  double v;
  double a;
};

// Closed-form motion law. Each throws Error(time_out_of_range) outside
// [0, t1].
double position(const MotionSpec& spec, double t);
double velocity(const MotionSpec& spec, double t);
double acceleration(const MotionSpec& spec, double t);
MotionSample sample_at(const MotionSpec& spec, double t);

/// Setpoint table at a fixed rate: floor(rate * t1) + 1 samples starting at
/// t = 0. The last sample lands at or just before t1.
std::vector<MotionSample> sample_uniform(const MotionSpec& spec, double rate);

struct MomentIntegrals {
  double accel;         ///< integral of u over [0, t1]
  double velocity;      ///< integral of v over [0, t1]; equals L for any n
  double accel_cos_kt;  ///< integral of u cos(kt)
  double accel_sin_kt;  ///< integral of u sin(kt)
};

/// Moment integrals by composite Simpson. A non-positive step selects the
/// default t1 / 1e5.
MomentIntegrals moment_integrals(const MotionSpec& spec, double step = 0.0);

/// (cos(2 pi n) - 1, sin(2 pi n)) evaluated on the fractional part of n so
/// that integer n gives exact zeros.
std::pair<double, double> timing_residual(double n);

/// Writes the `t,s,v,a` setpoint CSV.
void write_setpoints_csv(std::ostream& out,
                         const std::vector<MotionSample>& samples);

}  // namespace flexmotion
