#include "flexmotion/beam.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"
#include "json.hpp"

namespace flexmotion {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::non_positive_input,
                std::string(name) + " must be positive, got " +
                    format_number(value));
  }
}

}  // namespace

void BeamSpec::validate() const {
  require_positive(l, "l");
  require_positive(b, "b");
  require_positive(h, "h");
  require_positive(E, "E");
  require_positive(m_tip, "m_tip");
  if (h > b) {
    throw Error(ErrorKind::invalid_config,
                "beam thickness h must not exceed width b (weak-axis bending)");
  }
}

double area_moment(double b, double h) {
  require_positive(b, "b");
  require_positive(h, "h");
  return b * h * h * h / 12.0;
}

double tip_stiffness(double E, double I, double l) {
  require_positive(E, "E");
  require_positive(I, "I");
  require_positive(l, "l");
  return 3.0 * E * I / (l * l * l);
}

double natural_frequency(double c, double m) {
  require_positive(c, "c");
  require_positive(m, "m");
  return std::sqrt(c / m);
}

double beam_stiffness(const BeamSpec& beam) {
  beam.validate();
  return tip_stiffness(beam.E, area_moment(beam.b, beam.h), beam.l);
}

double beam_frequency(const BeamSpec& beam, double mass) {
  return natural_frequency(beam_stiffness(beam), mass);
}

BeamSpec parse_beam_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_config,
                std::string("beam json: ") + e.what());
  }
  auto field = [&](const char* key) {
    if (!doc.contains(key) || !doc[key].is_number()) {
      throw Error(ErrorKind::invalid_config,
                  std::string("beam json: missing numeric key '") + key + "'");
    }
    return doc[key].get<double>();
  };
  BeamSpec beam{field("l"), field("b"), field("h"), field("E"),
                field("m_tip")};
  beam.validate();
  return beam;
}

BeamSpec load_beam_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::io_failure, "cannot open beam file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_beam_json(buf.str());
}

}  // namespace flexmotion
