#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flexmotion/analysis.hpp"
#include "flexmotion/csv.hpp"
#include "flexmotion/error.hpp"
#include "flexmotion/signal.hpp"
#include "flexmotion/simulate.hpp"
#include "json.hpp"

namespace flexmotion::cli {

namespace {

// Writes through `fn` to `path`, or to `fallback` when the path is empty.
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::io_failure, "cannot write '" + path + "'");
  fn(file);
  file.flush();
  if (!file) throw Error(ErrorKind::io_failure, "write failed for '" + path + "'");
}

const char* mode_name(const MotionSpec& spec) {
  return spec.strict() ? "strict" : "exploratory";
}

}  // namespace

int cmd_plan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto spec = motion_spec(config);
  const auto samples = sample_uniform(spec, config.rate);
  with_output(config.output, out,
              [&](std::ostream& o) { write_setpoints_csv(o, samples); });
  // Keep stdout clean for the CSV when no file was given.
  std::ostream& info = config.output.empty() ? err : out;
  info << "t1 = " << format_number(spec.t1()) << " s\n"
       << "p = " << format_number(spec.p()) << " rad/s\n"
       << "peak acceleration = " << format_number(spec.accel_amplitude())
       << " m/s^2\n"
       << "mode = " << mode_name(spec) << '\n';
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto spec = motion_spec(config);
  const double tolerance = config.tolerance_factor * spec.L();
  const auto trace = integrate(spec, config.step.value_or(0.0));
  const auto report = residual_report(spec, trace, tolerance);
  const auto closed = residual_report(spec, tolerance);

  if (!config.output.empty()) {
    with_output(config.output, out,
                [&](std::ostream& o) { write_relative_csv(o, trace); });
  }
  if (!config.tip_output.empty()) {
    const auto tip = tip_trace(spec, config.rate);
    with_output(config.tip_output, out,
                [&](std::ostream& o) { write_series_csv(o, tip, "a_tip"); });
  }

  nlohmann::ordered_json doc;
  doc["L"] = spec.L();
  doc["k"] = spec.k();
  doc["n"] = spec.n();
  doc["m"] = spec.m();
  doc["mode"] = mode_name(spec);
  doc["p"] = spec.p();
  doc["t1"] = spec.t1();
  doc["step"] = trace.step;
  doc["x_end"] = report.x_end;
  doc["v_end"] = report.v_end;
  doc["amplitude"] = report.amplitude;
  doc["closed_form_amplitude"] = closed.amplitude;
  doc["tolerance"] = report.tolerance;
  doc["quiescent"] = report.quiescent;
  doc["action"] = report.action;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (!config.L) throw Error(ErrorKind::invalid_config, "missing --L");
  const auto sweep = sweep_n(*config.L, frequency(config), payload_mass(config),
                             config.n_from, config.n_to, config.n_step,
                             config.tolerance_factor);
  with_output(config.output, out,
              [&](std::ostream& o) { write_sweep_csv(o, sweep); });
  return kExitOk;
}

int cmd_filter(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.input.empty()) {
    throw Error(ErrorKind::invalid_config, "missing --in");
  }
  std::ifstream in(config.input);
  if (!in) {
    throw Error(ErrorKind::io_failure, "cannot open '" + config.input + "'");
  }
  std::string column = trace_column_name(in);
  in.clear();
  in.seekg(0);
  const auto series = load_trace(in);
  if (column.empty()) column = "value";

  const auto design =
      design_butterworth(config.order, config.cutoff_hz, series.rate);
  const auto filtered = filtfilt(design, series);
  with_output(config.output, out,
              [&](std::ostream& o) { write_series_csv(o, filtered, column); });
  return kExitOk;
}

int cmd_report(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (!config.beam) throw Error(ErrorKind::invalid_config, "missing --beam");
  if (!config.L) throw Error(ErrorKind::invalid_config, "missing --L");
  const double n = config.n.value_or(2.0);
  const auto table =
      table_report(config.masses, *config.beam, *config.L, n, config.unmatched_n);
  write_table_text(out, table);
  if (!config.output.empty()) {
    with_output(config.output, out,
                [&](std::ostream& o) { write_table_csv(o, table); });
  }
  return kExitOk;
}

namespace {

// Flag values land here first; only flags the user actually passed are
// copied over the JSON-derived config.
struct Flags {
  double L = 0, k = 0, n = 0, mass = 0, rate = 0, step = 0, tol = 0;
  double cutoff = 0, n_from = 0, n_to = 0, unmatched_n = 0;
  int order = 0;
  std::vector<double> masses;
  std::string beam, config, input, output, tip_output;
  bool exploratory = false;
};

struct Binding {
  CLI::Option* option;
  std::function<void(RunConfig&)> apply;
};

class Parser {
 public:
  Parser() : app_("Frequency-matched motion planning for flexible payloads") {
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all");

    auto* plan = sub("plan", "Write the t,s,v,a setpoint table");
    motion_options(plan);
    rate_option(plan);

    auto* sim = sub("simulate", "Integrate the relative motion and report quiescence");
    motion_options(sim);
    rate_option(sim);
    bind(sim->add_option("--step", flags_.step, "RK4 step [s] (default t1/2e4)"),
         [this](RunConfig& c) { c.step = flags_.step; });
    bind(sim->add_option("--tip-out", flags_.tip_output, "Write t,a_tip trace"),
         [this](RunConfig& c) { c.tip_output = flags_.tip_output; });

    auto* sweep = sub("sweep", "Residual amplitude and energy over a range of n");
    frequency_options(sweep);
    tolerance_option(sweep);
    bind(sweep->add_option("--n-from", flags_.n_from, "First multiple"),
         [this](RunConfig& c) { c.n_from = flags_.n_from; });
    bind(sweep->add_option("--n-to", flags_.n_to, "Last multiple"),
         [this](RunConfig& c) { c.n_to = flags_.n_to; });
    bind(sweep->add_option("--step", flags_.step, "Increment in n"),
         [this](RunConfig& c) { c.n_step = flags_.step; });

    auto* filter = sub("filter", "Zero-phase Butterworth lowpass of a t,<value> trace");
    bind(filter->add_option("--in", flags_.input, "Input CSV"),
         [this](RunConfig& c) { c.input = flags_.input; });
    bind(filter->add_option("--order", flags_.order, "Filter order (2, 4, 6, 8)"),
         [this](RunConfig& c) { c.order = flags_.order; });
    bind(filter->add_option("--cutoff-hz", flags_.cutoff, "Cutoff frequency [Hz]"),
         [this](RunConfig& c) { c.cutoff_hz = flags_.cutoff; });

    auto* report = sub("report", "Matched vs. unmatched amplitudes per payload mass");
    bind(report->add_option("--L", flags_.L, "Travel [m]"),
         [this](RunConfig& c) { c.L = flags_.L; });
    bind(report->add_option("--beam", flags_.beam, "Beam JSON (l,b,h,E,m_tip)"),
         [this](RunConfig& c) { c.beam = load_beam_json(flags_.beam); });
    bind(report->add_option("--n", flags_.n, "Matched multiple (default 2)"),
         [this](RunConfig& c) { c.n = flags_.n; });
    bind(report->add_option("--unmatched-n", flags_.unmatched_n,
                            "Non-integer multiple for the unmatched row"),
         [this](RunConfig& c) { c.unmatched_n = flags_.unmatched_n; });
    bind(report->add_option("--masses", flags_.masses, "Payload masses [kg]")
             ->delimiter(','),
         [this](RunConfig& c) { c.masses = flags_.masses; });
  }

  // Throws CLI::ParseError or flexmotion::Error.
  RunConfig parse(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    app_.parse(args);

    RunConfig config;
    for (auto* s : app_.get_subcommands()) config.subcommand = s->get_name();
    if (!flags_.config.empty()) apply_json_config_file(config, flags_.config);
    for (const auto& b : bindings_) {
      if (b.option->count() > 0) b.apply(config);
    }
    return config;
  }

  int exit(const CLI::ParseError& e, std::ostream& out, std::ostream& err) {
    return app_.exit(e, out, err);
  }

 private:
  CLI::App* sub(const char* name, const char* description) {
    auto* s = app_.add_subcommand(name, description);
    bind(s->add_option("--config", flags_.config, "JSON config (flags override)"),
         [](RunConfig&) {});
    bind(s->add_option("--out", flags_.output, "Output file (default stdout)"),
         [this](RunConfig& c) { c.output = flags_.output; });
    return s;
  }

  void frequency_options(CLI::App* s) {
    bind(s->add_option("--L", flags_.L, "Travel [m]"),
         [this](RunConfig& c) { c.L = flags_.L; });
    // A flag-given frequency source replaces whichever one the config had.
    bind(s->add_option("--k", flags_.k, "Natural frequency [rad/s]"),
         [this](RunConfig& c) {
           c.k = flags_.k;
           if (!flag_given("--beam")) c.beam.reset();
         });
    bind(s->add_option("--beam", flags_.beam, "Beam JSON (l,b,h,E,m_tip)"),
         [this](RunConfig& c) {
           c.beam = load_beam_json(flags_.beam);
           if (!flag_given("--k")) c.k.reset();
         });
    bind(s->add_option("--mass", flags_.mass, "Payload mass [kg]"),
         [this](RunConfig& c) { c.mass = flags_.mass; });
  }

  void motion_options(CLI::App* s) {
    frequency_options(s);
    tolerance_option(s);
    bind(s->add_option("--n", flags_.n, "Period multiple t1/tc"),
         [this](RunConfig& c) { c.n = flags_.n; });
    bind(s->add_flag("--exploratory", flags_.exploratory,
                     "Allow non-integer n (never reported quiescent)"),
         [this](RunConfig& c) { c.exploratory = flags_.exploratory; });
  }

  void rate_option(CLI::App* s) {
    bind(s->add_option("--rate", flags_.rate, "Sample rate [Hz] (default 1500)"),
         [this](RunConfig& c) { c.rate = flags_.rate; });
  }

  void tolerance_option(CLI::App* s) {
    bind(s->add_option("--tol", flags_.tol,
                       "Quiescence tolerance as a fraction of L (default 1e-6)"),
         [this](RunConfig& c) { c.tolerance_factor = flags_.tol; });
  }

  void bind(CLI::Option* option, std::function<void(RunConfig&)> apply) {
    bindings_.push_back({option, std::move(apply)});
  }


  bool flag_given(const std::string& name) const {
    for (auto* s : app_.get_subcommands()) {
      auto* opt = s->get_option_no_throw(name);
      if (opt != nullptr && opt->count() > 0) return true;
    }
    return false;
  }

  CLI::App app_;
  Flags flags_;
  std::vector<Binding> bindings_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Parser parser;
  try {
    const RunConfig config = parser.parse(args);
    if (config.subcommand == "plan") return cmd_plan(config, out, err);
    if (config.subcommand == "simulate") return cmd_simulate(config, out, err);
    if (config.subcommand == "sweep") return cmd_sweep(config, out, err);
    if (config.subcommand == "filter") return cmd_filter(config, out, err);
    if (config.subcommand == "report") return cmd_report(config, out, err);
    err << "error: unknown subcommand\n";
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    return parser.exit(e, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::io_failure ? kExitIo : kExitValidation;
  }
}

}  // namespace flexmotion::cli
