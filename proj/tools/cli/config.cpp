#include "cli/config.hpp"

#include <fstream>
#include <sstream>

#include "flexmotion/error.hpp"
#include "json.hpp"

namespace flexmotion::cli {

namespace {

using nlohmann::json;

double number(const json& doc, const char* key) {
  if (!doc[key].is_number()) {
    throw Error(ErrorKind::invalid_config,
                std::string("config: '") + key + "' must be a number");
  }
  return doc[key].get<double>();
}

std::string text(const json& doc, const char* key) {
  if (!doc[key].is_string()) {
    throw Error(ErrorKind::invalid_config,
                std::string("config: '") + key + "' must be a string");
  }
  return doc[key].get<std::string>();
}

}  // namespace

void apply_json_config(RunConfig& config, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_config, std::string("config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::invalid_config, "config: top level must be an object");
  }

  if (doc.contains("L")) config.L = number(doc, "L");
  if (doc.contains("k")) config.k = number(doc, "k");
  if (doc.contains("beam")) {
    const auto& b = doc["beam"];
    config.beam = b.is_string() ? load_beam_json(b.get<std::string>())
                                : parse_beam_json(b.dump());
  }
  if (doc.contains("n")) config.n = number(doc, "n");
  if (doc.contains("mass")) config.mass = number(doc, "mass");
  if (doc.contains("exploratory")) {
    if (!doc["exploratory"].is_boolean()) {
      throw Error(ErrorKind::invalid_config, "config: 'exploratory' must be a boolean");
    }
    config.exploratory = doc["exploratory"].get<bool>();
  }
  if (doc.contains("rate")) config.rate = number(doc, "rate");
  if (doc.contains("step")) config.step = number(doc, "step");
  if (doc.contains("tolerance")) config.tolerance_factor = number(doc, "tolerance");
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer()) {
      throw Error(ErrorKind::invalid_config, "config: 'order' must be an integer");
    }
    config.order = doc["order"].get<int>();
  }
  if (doc.contains("cutoff_hz")) config.cutoff_hz = number(doc, "cutoff_hz");
  if (doc.contains("n_from")) config.n_from = number(doc, "n_from");
  if (doc.contains("n_to")) config.n_to = number(doc, "n_to");
  if (doc.contains("n_step")) config.n_step = number(doc, "n_step");
  if (doc.contains("masses")) {
    const auto& ms = doc["masses"];
    if (!ms.is_array()) {
      throw Error(ErrorKind::invalid_config, "config: 'masses' must be an array");
    }
    config.masses.clear();
    for (const auto& m : ms) {
      if (!m.is_number()) {
        throw Error(ErrorKind::invalid_config, "config: 'masses' must hold numbers");
      }
      config.masses.push_back(m.get<double>());
    }
  }
  if (doc.contains("unmatched_n")) config.unmatched_n = number(doc, "unmatched_n");
  if (doc.contains("input")) config.input = text(doc, "input");
  if (doc.contains("output")) config.output = text(doc, "output");
  if (doc.contains("tip_output")) config.tip_output = text(doc, "tip_output");
}

void apply_json_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::io_failure, "cannot open config '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  apply_json_config(config, buf.str());
}

double payload_mass(const RunConfig& config) {
  if (config.mass) return *config.mass;
  if (config.beam) return config.beam->m_tip;
  return 1.0;
}

double frequency(const RunConfig& config) {
  if (config.k && config.beam) {
    throw Error(ErrorKind::invalid_config,
                "give exactly one frequency source: --k or --beam, not both");
  }
  if (config.k) return *config.k;
  if (config.beam) return beam_frequency(*config.beam, payload_mass(config));
  throw Error(ErrorKind::invalid_config,
              "missing frequency source: give --k or --beam");
}

MotionSpec motion_spec(const RunConfig& config) {
  if (!config.L) throw Error(ErrorKind::invalid_config, "missing --L");
  if (!config.n) throw Error(ErrorKind::invalid_config, "missing --n");
  return make_spec(*config.L, frequency(config), *config.n,
                   payload_mass(config),
                   config.exploratory ? PlanMode::exploratory
                                      : PlanMode::strict);
}

}  // namespace flexmotion::cli
