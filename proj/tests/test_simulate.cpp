#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "flexmotion/error.hpp"
#include "flexmotion/simulate.hpp"
#include "oracles.hpp"

using namespace flexmotion;

namespace {

MotionSpec paper_spec(double n = 2) {
  return make_spec(0.41, 5.78, n, 0.09,
                   n == std::floor(n) ? PlanMode::strict : PlanMode::exploratory);
}

}  // namespace

TEST(RelativeClosedForm, Examples) {
  const auto spec = paper_spec();
  const auto end = relative_closed_form(spec, spec.t1());
  EXPECT_NEAR(end.x, 0.0, 1e-15);
  EXPECT_NEAR(end.v, 0.0, 1e-15);
  EXPECT_NEAR(end.a, 0.0, 1e-14);
  EXPECT_NEAR(relative_closed_form(spec, spec.t1() / 2).x, 0.0, 1e-15);
  EXPECT_NEAR(relative_closed_form(spec, spec.t1() / 4).x,
              oracle::kRelativeQuarter, 1e-15);
  EXPECT_NEAR(oracle::kRelativeQuarter, -0.02175, 1e-5);
  EXPECT_THROW(relative_closed_form(spec, -0.1), Error);
}

// The closed form must satisfy x'' + k^2 x = -u and start from rest; checked
// by central differences, independent of the integrator.
TEST(RelativeClosedForm, SatisfiesOscillatorEquation) {
  for (double n : {2.0, 3.0, 2.5, 7.0}) {
    const auto spec = paper_spec(n);
    const double k = spec.k();
    const double h = 1e-4;
    const auto start = relative_closed_form(spec, 0.0);
    EXPECT_EQ(start.x, 0.0);
    EXPECT_EQ(start.v, 0.0);
    for (int i = 1; i < 50; ++i) {
      const double t = spec.t1() * i / 50.0;
      const auto c = relative_closed_form(spec, t);
      const double xpp = (relative_closed_form(spec, t + h).x - 2 * c.x +
                          relative_closed_form(spec, t - h).x) / (h * h);
      const double vp = (relative_closed_form(spec, t + h).x -
                         relative_closed_form(spec, t - h).x) / (2 * h);
      EXPECT_NEAR(xpp + k * k * c.x, -acceleration(spec, t), 1e-5) << n << " " << t;
      EXPECT_NEAR(vp, c.v, 1e-7);
      EXPECT_NEAR(c.a, -k * k * c.x - acceleration(spec, t), 1e-12);
    }
  }
}

TEST(OscillatorOde, SignConvention) {
  const Forcing none = [](double) { return 0.0; };
  auto d = oscillator_ode(3.0, none, {0, 0}, 0.0);
  EXPECT_EQ(d.x, 0.0);
  EXPECT_EQ(d.v, 0.0);
  d = oscillator_ode(3.0, none, {0.2, 0}, 0.0);
  EXPECT_EQ(d.x, 0.0);
  EXPECT_DOUBLE_EQ(d.v, -9.0 * 0.2);
  const auto spec = paper_spec();
  const double t = 1e-3;
  d = oscillator_ode(spec.k(), planned_forcing(spec), {0, 0}, t);
  EXPECT_DOUBLE_EQ(d.v, -acceleration(spec, t));
}

TEST(Integrate, ZeroForcingStaysAtRest) {
  const auto tr = integrate([](double) { return 0.0; }, 5.0, 3.0, 1e-3);
  for (const auto& s : tr.states) {
    EXPECT_EQ(s.x, 0.0);
    EXPECT_EQ(s.v, 0.0);
  }
  EXPECT_DOUBLE_EQ(tr.end_time(), 3.0);
}

TEST(Integrate, FreeOscillatorMatchesCosine) {
  const double k = 7.3, x0 = 0.05;
  const double period = 2 * oracle::kPi / k;
  const auto tr = integrate([](double) { return 0.0; }, k, period, period / 2000,
                            {x0, 0.0});
  for (std::size_t i = 0; i < tr.size(); ++i) {
    EXPECT_NEAR(tr.states[i].x, x0 * std::cos(k * tr.time(i)), 1e-8 * x0);
  }
}

TEST(Integrate, RejectsCoarseStep) {
  try {
    integrate([](double) { return 0.0; }, 5.0, 3.0, 2 * oracle::kPi / 5.0 / 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::step_too_coarse);
  }
}

TEST(Integrate, AgreesWithClosedFormOnPaperSpec) {
  const auto spec = paper_spec();
  const auto tr = integrate(spec, spec.t1() / 2e4);
  ASSERT_EQ(tr.size(), 20001u);
  double worst = 0;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const auto c = relative_closed_form(spec, std::min(tr.time(i), spec.t1()));
    worst = std::max(worst, std::abs(tr.states[i].x - c.x));
  }
  EXPECT_LE(worst, 1e-8);
  EXPECT_LE(std::abs(tr.states.back().x), 1e-8);
}

TEST(ResidualReport, StrictIsQuiescent) {
  const auto spec = paper_spec();
  const auto closed = residual_report(spec);
  EXPECT_TRUE(closed.quiescent);
  EXPECT_LE(closed.amplitude, 1e-6 * 0.41);
  const auto rk = residual_report(spec, integrate(spec));
  EXPECT_TRUE(rk.quiescent);
  EXPECT_LE(rk.amplitude, 1e-6 * 0.41);
  EXPECT_GE(rk.amplitude, std::abs(rk.x_end));
  EXPECT_DOUBLE_EQ(rk.tolerance, 1e-6 * 0.41);
}

TEST(ResidualReport, ExploratoryNeverQuiescent) {
  const auto spec = paper_spec(2.5);
  const auto r = residual_report(spec);
  EXPECT_FALSE(r.quiescent);
  EXPECT_NEAR(r.amplitude, oracle::kAmplitudeN25, 1e-14);
  EXPECT_NEAR(r.amplitude, std::hypot(r.x_end, r.v_end / spec.k()), 1e-18);
  // Even a tolerance that would admit it does not flip the flag.
  EXPECT_FALSE(residual_report(spec, 1.0).quiescent);

  const auto far = residual_report(paper_spec(10.5));
  EXPECT_NEAR(far.amplitude, oracle::kAmplitudeN105, 1e-15);
  EXPECT_LT(far.amplitude, r.amplitude);
  EXPECT_GT(far.amplitude, 0.0);
}

TEST(ResidualReport, IncompleteTraceRejected) {
  const auto spec = paper_spec();
  const auto partial = integrate(planned_forcing(spec), spec.k(), 0.5 * spec.t1(),
                                 spec.t1() / 2e4);
  try {
    residual_report(spec, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::incomplete_trace);
  }
}

// Strict plans over randomized L, k and every n in 2..10 end at rest, in
// closed form and under RK4.
TEST(QuiescenceProperty, RandomStrictSpecs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> Ld(0.1, 2.0), kd(1.0, 50.0);
  for (int n = 2; n <= 10; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const double L = Ld(rng);
      const auto spec = make_spec(L, kd(rng), n, 1.0);
      EXPECT_LE(residual_report(spec).amplitude, 1e-6 * L);
      const auto rk = residual_report(spec, integrate(spec));
      EXPECT_TRUE(rk.quiescent) << "n=" << n << " amp=" << rk.amplitude;
    }
  }
}

TEST(QuiescenceProperty, NonIntegerWitness) {
  const std::pair<double, double> cases[] = {{1.5, 2.0}, {2.5, 2.0}, {2.5, 3.0},
                                             {3.5, 3.0}, {3.5, 4.0}};
  const double expected[] = {oracle::kAmplitudeN15, oracle::kAmplitudeN25,
                             oracle::kAmplitudeN25, oracle::kAmplitudeN35,
                             oracle::kAmplitudeN35};
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    const auto [odd, whole] = cases[i];
    const double a_odd = residual_report(paper_spec(odd)).amplitude;
    const double a_whole =
        residual_report(paper_spec(whole), integrate(paper_spec(whole))).amplitude;
    EXPECT_NEAR(a_odd, expected[i], 1e-14);
    EXPECT_NEAR(a_odd, oracle::residual_amplitude(0.41, odd), 1e-14);
    EXPECT_GE(a_odd, 1e3 * a_whole);
  }
}

// Any finite sine series in harmonics of p that avoids the resonant harmonic
// j = n also leaves the payload at rest.
TEST(QuiescenceProperty, SineSeriesControlsEndAtRest) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int set = 0; set < 3; ++set) {
    const int n = 4 + set;
    const double k = 6.0 + set;
    const double p = k / n;
    const double t1 = 2 * oracle::kPi / p;
    const double a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
    const Forcing u = [=](double t) {
      return a1 * std::sin(p * t) + a2 * std::sin(2 * p * t) + a3 * std::sin(3 * p * t);
    };
    // Moment conditions by quadrature.
    const double ic = oracle::gauss_legendre(
        [&](double t) { return u(t) * std::cos(k * t); }, 0, t1, 400);
    const double is = oracle::gauss_legendre(
        [&](double t) { return u(t) * std::sin(k * t); }, 0, t1, 400);
    const double i0 = oracle::gauss_legendre(u, 0, t1, 400);
    EXPECT_NEAR(ic, 0.0, 1e-12);
    EXPECT_NEAR(is, 0.0, 1e-12);
    EXPECT_NEAR(i0, 0.0, 1e-12);

    const auto tr = integrate(u, k, t1, t1 / 2e4);
    const auto& end = tr.states.back();
    EXPECT_LE(std::hypot(end.x, end.v / k), 1e-9) << "set " << set;
    // Mid-move the payload does swing.
    EXPECT_GT(std::abs(tr.states[tr.size() / 3].x), 1e-4);
  }
}

TEST(TipTrace, SumsTranslationalAndRelativeAcceleration) {
  const auto spec = paper_spec();
  const auto tip = tip_trace(spec, 1500);
  ASSERT_EQ(tip.size(), 3262u);
  EXPECT_EQ(tip.values.front(), 0.0);
  for (std::size_t i = 0; i < tip.size(); ++i) {
    const double t = tip.time(i);
    EXPECT_DOUBLE_EQ(tip.values[i],
                     acceleration(spec, t) + relative_closed_form(spec, t).a);
  }
  // At exactly t1 both parts vanish.
  EXPECT_NEAR(acceleration(spec, spec.t1()) +
                  relative_closed_form(spec, spec.t1()).a, 0.0, 1e-14);
  const auto coarse = tip_trace(spec, 1.0 / spec.t1());
  EXPECT_NEAR(coarse.values.back(), 0.0, 1e-14);
}

TEST(ActionValue, ZeroPathIsZero) {
  const auto spec = paper_spec();
  EXPECT_EQ(action_value([](double) { return PathPoint{0, 0}; }, spec), 0.0);
}

TEST(ActionValue, OptimalPathBaseline) {
  const auto spec = paper_spec();
  EXPECT_NEAR(action_value(planned_path(spec), spec), oracle::kActionStar, 1e-14);
}

namespace {

double perturbed_action(const MotionSpec& spec, double eps, int shape) {
  const double t1 = spec.t1();
  const double w = (shape == 0 ? 1.0 : 3.0) * oracle::kPi / t1;
  auto base = planned_path(spec);
  return action_value(
      [&](double t) {
        auto q = base(t);
        q.s += eps * std::sin(w * t);
        q.v += eps * w * std::cos(w * t);
        return q;
      },
      spec);
}

}  // namespace

TEST(ActionValue, StationaryUnderEndpointPerturbations) {
  const auto spec = paper_spec();
  const double j_star = action_value(planned_path(spec), spec);
  for (int shape = 0; shape < 2; ++shape) {
    for (double eps : {4e-3, 1e-3}) {
      const double d1 = perturbed_action(spec, eps, shape) - j_star;
      const double d2 = perturbed_action(spec, eps / 2, shape) - j_star;
      EXPECT_NEAR(d1 / d2, 4.0, 0.1) << "shape " << shape << " eps " << eps;
    }
  }
  // The stationary point is a saddle: the slow shape lowers J, the fast one
  // raises it.
  EXPECT_LT(perturbed_action(spec, 1e-3, 0), j_star);
  EXPECT_GT(perturbed_action(spec, 1e-3, 1), j_star);
}

TEST(EulerResidual, VanishesOnOptimalProfile) {
  const auto spec = paper_spec();
  const double p = spec.p();
  const double scale = 0.41 * p * p * p * spec.t1() / (2 * oracle::kPi);
  EXPECT_EQ(euler_residual(spec, 0.0), 0.0);
  for (int i = 0; i <= 100; ++i) {
    EXPECT_LE(std::abs(euler_residual(spec, std::min(spec.t1() * i / 100.0, spec.t1()))), 1e-12 * scale);
  }
}

TEST(EulerResidual, NonzeroForConstantAccelerationRamp) {
  const auto spec = paper_spec();
  const double t1 = spec.t1();
  const double u0 = 4 * 0.41 / (t1 * t1);  // reaches L/2 at t1/2
  const double t = 0.5 * t1;
  const double r = euler_residual(spec, t, 0.5 * u0 * t * t, u0);
  const double p = spec.p();
  EXPECT_NEAR(r, u0 + p * p * 0.5 * u0 * t * t - 0.41 * p * p * p * t / (2 * oracle::kPi),
              1e-14);
  EXPECT_GT(std::abs(r), 0.1);
}
