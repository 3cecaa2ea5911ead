#include "flexmotion/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"
#include "flexmotion/quadrature.hpp"

namespace flexmotion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

RelativeMotion relative_closed_form(const MotionSpec& spec, double t) {
  if (!(t >= 0.0 && t <= spec.t1())) {
    throw Error(ErrorKind::time_out_of_range,
                "relative_closed_form: t outside [0, t1]");
  }
  const double k = spec.k();
  const double p = spec.p();
  const double factor = spec.L() * p * p / (kTwoPi * (k * k - p * p));
  const double skt = std::sin(k * t);
  const double spt = std::sin(p * t);
  return {
      factor * (p / k * skt - spt),
      factor * p * (std::cos(k * t) - std::cos(p * t)),
      factor * p * (p * spt - k * skt),
  };
}

OscillatorState oscillator_ode(double k, const Forcing& forcing,
                               const OscillatorState& state, double t) {
  return {state.v, -k * k * state.x - forcing(t)};
}

Trajectory integrate(const Forcing& forcing, double k, double t_end,
                     double step, OscillatorState initial) {
  if (!(k > 0.0) || !(t_end > 0.0) || !(step > 0.0)) {
    throw Error(ErrorKind::non_positive_input,
                "integrate: k, t_end and step must be positive");
  }
  const double max_step = kTwoPi / k / 50.0;
  if (step > max_step) {
    throw Error(ErrorKind::step_too_coarse,
                "integrate: step " + format_number(step) +
                    " exceeds natural period / 50 = " +
                    format_number(max_step));
  }
  const auto steps =
      static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
  const double h = t_end / static_cast<double>(steps);

  Trajectory out;
  out.k = k;
  out.step = h;
  out.states.reserve(steps + 1);
  out.forcing.reserve(steps + 1);
  out.states.push_back(initial);
  out.forcing.push_back(forcing(0.0));

  OscillatorState y = initial;
  auto axpy = [](const OscillatorState& s, double a, const OscillatorState& d) {
    return OscillatorState{s.x + a * d.x, s.v + a * d.v};
  };
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * h;
    const double t_mid = t + 0.5 * h;
    const double t_next =
        (i + 1 == steps) ? t_end : static_cast<double>(i + 1) * h;
    const auto k1 = oscillator_ode(k, forcing, y, t);
    const auto k2 = oscillator_ode(k, forcing, axpy(y, 0.5 * h, k1), t_mid);
    const auto k3 = oscillator_ode(k, forcing, axpy(y, 0.5 * h, k2), t_mid);
    const auto k4 = oscillator_ode(k, forcing, axpy(y, h, k3), t_next);
    y.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    y.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    out.states.push_back(y);
    out.forcing.push_back(forcing(t_next));
  }
  return out;
}

Forcing planned_forcing(const MotionSpec& spec) {
  return [spec](double t) {
    return acceleration(spec, std::clamp(t, 0.0, spec.t1()));
  };
}

Trajectory integrate(const MotionSpec& spec, double step) {
  const double t1 = spec.t1();
  if (!(step > 0.0)) step = t1 / 2e4;
  return integrate(planned_forcing(spec), spec.k(), t1, step);
}

double default_quiescence_tolerance(const MotionSpec& spec) {
  return 1e-6 * spec.L();
}

namespace {

ResidualReport make_report(const MotionSpec& spec, double x, double v,
                           double tolerance) {
  if (!(tolerance > 0.0)) tolerance = default_quiescence_tolerance(spec);
  ResidualReport r;
  r.x_end = x;
  r.v_end = v;
  r.amplitude = std::hypot(x, v / spec.k());
  r.tolerance = tolerance;
  r.quiescent = spec.strict() && r.amplitude <= tolerance;
  r.action = action_value(planned_path(spec), spec);
  return r;
}

}  // namespace

ResidualReport residual_report(const MotionSpec& spec, double tolerance) {
  const auto end = relative_closed_form(spec, spec.t1());
  return make_report(spec, end.x, end.v, tolerance);
}

ResidualReport residual_report(const MotionSpec& spec, const Trajectory& trace,
                               double tolerance) {
  const double t1 = spec.t1();
  if (trace.size() < 2 || std::abs(trace.end_time() - t1) > 1e-9 * t1) {
    throw Error(ErrorKind::incomplete_trace,
                "residual_report: trace ends at " +
                    format_number(trace.end_time()) + ", expected t1 = " +
                    format_number(t1));
  }
  const auto& end = trace.states.back();
  return make_report(spec, end.x, end.v, tolerance);
}

TimeSeries tip_trace(const MotionSpec& spec, double rate) {
  TimeSeries out;
  out.rate = rate;
  for (const auto& sample : sample_uniform(spec, rate)) {
    out.values.push_back(sample.a + relative_closed_form(spec, sample.t).a);
  }
  return out;
}

Path planned_path(const MotionSpec& spec) {
  return [spec](double t) {
    t = std::clamp(t, 0.0, spec.t1());
    return PathPoint{position(spec, t), velocity(spec, t)};
  };
}

double action_value(const Path& path, const MotionSpec& spec, double step) {
  const double t1 = spec.t1();
  if (!(step > 0.0)) step = t1 / 1e5;
  const double m = spec.m();
  const double p = spec.p();
  // c / n^2 with c = m k^2 is m p^2.
  const double stiffness = m * p * p;
  const double work = m * spec.L() * p * p * p / kTwoPi;
  return simpson(
      [&](double t) {
        const auto q = path(t);
        return 0.5 * m * q.v * q.v - 0.5 * stiffness * q.s * q.s +
               work * t * q.s;
      },
      0.0, t1, step);
}

double euler_residual(const MotionSpec& spec, double t, double s, double a) {
  const double p = spec.p();
  return a + p * p * s - spec.L() * p * p * p * t / kTwoPi;
}

double euler_residual(const MotionSpec& spec, double t) {
  return euler_residual(spec, t, position(spec, t), acceleration(spec, t));
}

void write_relative_csv(std::ostream& out, const Trajectory& trace) {
  write_csv_header(out, {"t", "x_r", "v_r", "a_r"});
  for (std::size_t i = 0; i < trace.size(); ++i) {
    write_csv_row(out, {trace.time(i), trace.states[i].x, trace.states[i].v,
                        trace.accel(i)});
  }
}

}  // namespace flexmotion
