#pragma once

#include <string>

namespace flexmotion {

/// Rectangular cantilever strip with a lumped tip mass. Bending is about the
/// weak axis, so the thickness h enters cubed. Beam self-mass is neglected.
struct BeamSpec {
  double l;      ///< free length [m]
  double b;      ///< width [m]
  double h;      ///< thickness [m], h <= b
  double E;      ///< Young's modulus [Pa]
  double m_tip;  ///< tip mass [kg]

  void validate() const;
};

/// b * h^3 / 12.
double area_moment(double b, double h);

/// Lumped cantilever tip stiffness 3 E I / l^3 [N/m].
double tip_stiffness(double E, double I, double l);

/// sqrt(c / m) [rad/s].
double natural_frequency(double c, double m);

double beam_stiffness(const BeamSpec& beam);
/// Natural frequency of the beam carrying `mass` at its tip.
double beam_frequency(const BeamSpec& beam, double mass);
inline double beam_frequency(const BeamSpec& beam) {
  return beam_frequency(beam, beam.m_tip);
}

/// Parses `{"l":..,"b":..,"h":..,"E":..,"m_tip":..}` (SI units).
BeamSpec parse_beam_json(const std::string& text);
BeamSpec load_beam_json(const std::string& path);

}  // namespace flexmotion
