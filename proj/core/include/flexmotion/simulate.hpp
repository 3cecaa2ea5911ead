#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "flexmotion/profile.hpp"
#include "flexmotion/series.hpp"

namespace flexmotion {

/// Relative (oscillatory) state of the payload in the moving frame.
struct OscillatorState {
  double x = 0.0;  ///< relative displacement [m]
  double v = 0.0;  ///< relative velocity [m/s]
};

struct RelativeMotion {
  double x;
  double v;
  double a;
};

/// Frame acceleration as a function of time.
using Forcing = std::function<double(double)>;

/// Closed-form response of x'' + k^2 x = -u(t) from rest under the planned
/// sine acceleration, valid on [0, t1].
RelativeMotion relative_closed_form(const MotionSpec& spec, double t);

/// Right-hand side of x'' + k^2 x = -u(t).
OscillatorState oscillator_ode(double k, const Forcing& forcing,
                               const OscillatorState& state, double t);

/// Fixed-step RK4 trajectory sampled at every step.
struct Trajectory {
  double k = 0.0;
  double step = 0.0;
  std::vector<OscillatorState> states;
  std::vector<double> forcing;  ///< u(t_i), kept so a_r can be reconstructed

  std::size_t size() const noexcept { return states.size(); }
  double time(std::size_t i) const noexcept {
    return static_cast<double>(i) * step;
  }
  double end_time() const noexcept {
    return states.empty() ? 0.0 : time(states.size() - 1);
  }
  /// Relative acceleration -k^2 x - u at sample i.
  double accel(std::size_t i) const noexcept {
    return -k * k * states[i].x - forcing[i];
  }
};

/// Classical RK4 from `initial` over [0, t_end]. The step is shrunk so an
/// integer number of steps lands exactly on t_end. Throws
/// Error(step_too_coarse) when step > (2 pi / k) / 50.
Trajectory integrate(const Forcing& forcing, double k, double t_end,
                     double step, OscillatorState initial = {});

/// Integrates the planned motion over [0, t1]. A non-positive step selects
/// t1 / 2e4.
Trajectory integrate(const MotionSpec& spec, double step = 0.0);

/// Forcing closure for the planned acceleration law. Times are clamped to
/// [0, t1] so RK4 stages that round past t1 by an ulp stay valid.
Forcing planned_forcing(const MotionSpec& spec);

struct ResidualReport {
  double x_end = 0.0;
  double v_end = 0.0;
  double amplitude = 0.0;  ///< sqrt(x_end^2 + (v_end / k)^2)
  double tolerance = 0.0;
  bool quiescent = false;  ///< strict spec and amplitude <= tolerance
  double action = 0.0;     ///< action of the planned translational motion
};

/// Default quiescence tolerance 1e-6 * L.
double default_quiescence_tolerance(const MotionSpec& spec);

/// Report from the closed form evaluated at t1. A non-positive tolerance
/// selects the default.
ResidualReport residual_report(const MotionSpec& spec, double tolerance = 0.0);

/// Report from an integrated trace; throws Error(incomplete_trace) unless the
/// trace starts at 0 and reaches t1.
ResidualReport residual_report(const MotionSpec& spec, const Trajectory& trace,
                               double tolerance = 0.0);

/// Emulated accelerometer signal u(t) + a_r(t), noise-free, sampled like
/// sample_uniform.
TimeSeries tip_trace(const MotionSpec& spec, double rate);

struct PathPoint {
  double s;
  double v;
};
using Path = std::function<PathPoint(double)>;

/// The planned (s, v) path as a closure.
Path planned_path(const MotionSpec& spec);

/// Action integral of (m v^2 / 2 - c s^2 / (2 n^2) + m L p^3 t s / (2 pi))
/// over [0, t1], with c = m k^2. A non-positive step selects t1 / 1e5.
double action_value(const Path& path, const MotionSpec& spec,
                    double step = 0.0);

/// a + p^2 s - L p^3 t / (2 pi) for the planned law.
double euler_residual(const MotionSpec& spec, double t);
/// Same residual for an arbitrary position/acceleration pair.
double euler_residual(const MotionSpec& spec, double t, double s, double a);

/// `t,x_r,v_r,a_r` CSV.
void write_relative_csv(std::ostream& out, const Trajectory& trace);

}  // namespace flexmotion
