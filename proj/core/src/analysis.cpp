#include "flexmotion/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"
#include "flexmotion/quadrature.hpp"

namespace flexmotion {

namespace {

bool is_quiescent_multiple(double n) { return n >= 2.0 && n == std::floor(n); }

MotionSpec spec_for(double L, double k, double n, double m) {
  return make_spec(L, k, n, m,
                   is_quiescent_multiple(n) ? PlanMode::strict
                                            : PlanMode::exploratory);
}

}  // namespace

double energy_figure(const MotionSpec& spec, double step) {
  const double t1 = spec.t1();
  if (!(step > 0.0)) step = t1 / 1e5;
  const double m = spec.m();
  auto power = [&](double t) {
    return m * std::abs(acceleration(spec, t) * velocity(spec, t));
  };
  // u changes sign at t1 / 2; integrating each half keeps Simpson on a
  // smooth integrand.
  const double half = 0.5 * t1;
  return simpson(power, 0.0, half, step) + simpson(power, half, t1, step);
}

SweepResult sweep_n(double L, double k, double m, double n_from, double n_to,
                    double step, double tolerance_factor) {
  if (!(n_from > 1.0)) {
    throw Error(n_from == 1.0 ? ErrorKind::resonant_multiple
                              : ErrorKind::super_resonant_multiple,
                "sweep: range must lie above n = 1, got n_from = " +
                    format_number(n_from));
  }
  if (!(step > 0.0) || !(n_to >= n_from)) {
    throw Error(ErrorKind::non_positive_input,
                "sweep: need step > 0 and n_to >= n_from");
  }

  SweepResult result{L, k, m, {}};
  const auto count =
      static_cast<std::size_t>(std::floor((n_to - n_from) / step + 1e-9)) + 1;
  result.rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double n = n_from + static_cast<double>(i) * step;
    if (std::abs(n - std::round(n)) <= 1e-9) n = std::round(n);
    const auto spec = spec_for(L, k, n, m);
    const auto end = relative_closed_form(spec, spec.t1());
    const double amplitude = std::hypot(end.x, end.v / k);
    const double tol = tolerance_factor * L;
    result.rows.push_back({n, spec.t1(), amplitude, energy_figure(spec),
                           spec.strict() && amplitude <= tol});
  }
  return result;
}

double suppression_ratio(const ResidualReport& matched,
                         const ResidualReport& unmatched) {
  // Both sides are floored at the tolerance so sub-tolerance residuals
  // compare as equal.
  const double floor = matched.tolerance;
  return std::max(unmatched.amplitude, floor) /
         std::max(matched.amplitude, floor);
}

TableReport table_report(const std::vector<double>& masses,
                         const BeamSpec& beam, double L, double n_matched,
                         double n_unmatched) {
  TableReport table;
  table.L = L;
  table.n_matched = n_matched;
  table.n_unmatched = n_unmatched;
  for (double mass : masses) {
    const double k = beam_frequency(beam, mass);
    const auto matched =
        residual_report(make_spec(L, k, n_matched, mass, PlanMode::strict));
    const auto unmatched = residual_report(
        make_spec(L, k, n_unmatched, mass, PlanMode::exploratory));
    table.columns.push_back({mass, k, matched.amplitude, unmatched.amplitude});
  }
  table.caption =
      "Simulated residual tip amplitude (noise-free, undamped model). "
      "Experimental millimetre values include drive noise and are not "
      "reproduced.";
  return table;
}

void write_table_text(std::ostream& out, const TableReport& table) {
  char buf[96];
  out << table.caption << '\n';
  std::snprintf(buf, sizeof buf, "L = %g m, matched n = %g, unmatched n = %g\n",
                table.L, table.n_matched, table.n_unmatched);
  out << buf;

  auto row = [&](const char* label, auto value) {
    std::snprintf(buf, sizeof buf, "%-24s", label);
    out << buf;
    for (const auto& c : table.columns) {
      std::snprintf(buf, sizeof buf, " %12.4e", value(c));
      out << buf;
    }
    out << '\n';
  };
  row("m [kg]", [](const TableColumn& c) { return c.mass; });
  row("k [rad/s]", [](const TableColumn& c) { return c.k; });
  row("unmatched amplitude [m]", [](const TableColumn& c) { return c.unmatched; });
  row("matched amplitude [m]", [](const TableColumn& c) { return c.matched; });
}

void write_table_csv(std::ostream& out, const TableReport& table) {
  write_csv_header(out, {"m", "k", "matched", "unmatched"});
  for (const auto& c : table.columns) {
    write_csv_row(out, {c.mass, c.k, c.matched, c.unmatched});
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  write_csv_header(out, {"n", "t1", "residual", "energy", "quiescent"});
  for (const auto& r : sweep.rows) {
    write_csv_row(out, {r.n, r.t1, r.residual, r.energy,
                        r.quiescent ? 1.0 : 0.0});
  }
}

}  // namespace flexmotion
