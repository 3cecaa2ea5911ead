#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexmotion/beam.hpp"
#include "flexmotion/profile.hpp"

namespace flexmotion::cli {

/// Everything a subcommand may need. JSON config values are loaded first and
/// command-line flags override them field by field.
struct RunConfig {
  std::string subcommand;

  std::optional<double> L;
  std::optional<double> k;
  std::optional<BeamSpec> beam;
  std::optional<double> n;
  std::optional<double> mass;
  bool exploratory = false;

  double rate = 1500.0;
  std::optional<double> step;     // RK4 step [s]
  double tolerance_factor = 1e-6; // quiescence tolerance as a fraction of L

  int order = 4;
  double cutoff_hz = 20.0;

  double n_from = 2.0;
  double n_to = 4.0;
  double n_step = 0.5;

  std::vector<double> masses{0.02, 0.06, 0.075, 0.09};
  double unmatched_n = 2.5;

  std::string input;
  std::string output;      // empty: standard output
  std::string tip_output;  // simulate: optional `t,a_tip` trace
};

/// Applies keys of a JSON config document onto `config`. `beam` may be an
/// inline object or a path to a beam file.
void apply_json_config(RunConfig& config, const std::string& json_text);
void apply_json_config_file(RunConfig& config, const std::string& path);

/// Payload mass: --mass, else the beam's tip mass, else 1 kg.
double payload_mass(const RunConfig& config);

/// Frequency from the single configured source. Throws
/// Error(invalid_config) when neither or both are present.
double frequency(const RunConfig& config);

MotionSpec motion_spec(const RunConfig& config);

}  // namespace flexmotion::cli
