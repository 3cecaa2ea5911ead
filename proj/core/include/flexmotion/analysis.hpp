#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flexmotion/beam.hpp"
#include "flexmotion/simulate.hpp"

namespace flexmotion {

struct SweepRow {
  double n;
  double t1;
  double residual;  ///< phasor amplitude at t1 [m]
  double energy;    ///< energy figure [J]
  bool quiescent;
};

struct SweepResult {
  double L;
  double k;
  double m;
  std::vector<SweepRow> rows;  ///< ordered by n
};

/// Closed-form residual and energy for n = from, from + step, ... <= to.
/// Values within 1e-9 of an integer are snapped to it. Throws if from <= 1.
SweepResult sweep_n(double L, double k, double m, double n_from, double n_to,
                    double step, double tolerance_factor = 1e-6);

/// E = integral of m |u v| over [0, t1]. A non-positive step selects t1/1e5.
double energy_figure(const MotionSpec& spec, double step = 0.0);

/// max(unmatched.amplitude, tol) / max(matched.amplitude, tol) with
/// tol = matched.tolerance.
double suppression_ratio(const ResidualReport& matched,
                         const ResidualReport& unmatched);

struct TableColumn {
  double mass;
  double k;
  double matched;
  double unmatched;
};

struct TableReport {
  double L;
  double n_matched;
  double n_unmatched;
  std::vector<TableColumn> columns;
  std::string caption;
};

/// Simulated matched vs. unmatched tip amplitudes per payload mass, with each
/// mass's k taken from the beam.
TableReport table_report(const std::vector<double>& masses,
                         const BeamSpec& beam, double L, double n_matched,
                         double n_unmatched);

void write_table_text(std::ostream& out, const TableReport& table);
void write_table_csv(std::ostream& out, const TableReport& table);
/// `n,t1,residual,energy,quiescent` with quiescent written as 1/0.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

}  // namespace flexmotion
