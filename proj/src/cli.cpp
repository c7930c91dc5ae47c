#include "qqesd/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>

#include "qqesd/selfcheck.hpp"

namespace qqesd::cli {

namespace {

const char* const kUsageLine =
    "Usage: esd {curve|esd-time|selfcheck|dump-state} [--scenario qubit|qutrit|multilocal]\n"
    "           [--x X] [--rate-a RATE] [--rate-b RATE] [--t-max T] [--steps N] [--out PATH]\n";

const std::map<std::string, ScenarioKind> kScenarioNames{
    {"qubit", ScenarioKind::QubitOnly},
    {"qutrit", ScenarioKind::QutritOnly},
    {"multilocal", ScenarioKind::MultiLocal},
};

CLI::Validator positivity_range() {
  return CLI::Validator(
      [](std::string& input) -> std::string {
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(input, &used);
          if (used != input.size()) return "'" + input + "' is not a number";
        } catch (const std::exception&) {
          return "'" + input + "' is not a number";
        }
        if (!(v >= 0.0 && v <= kMaxAnsatzX)) {
          return "x = " + input + " is outside the positivity range 0 <= x <= 1/4";
        }
        return {};
      },
      "in [0, 1/4]");
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Entanglement sudden death of qubit-qutrit states under local dephasing", "esd"};
  app.require_subcommand(1, 1);

  std::string scenario = "qubit";
  app.add_option("--scenario", scenario, "Which subsystems are dephased")
      ->check(CLI::IsMember({"qubit", "qutrit", "multilocal"}));
  app.add_option("--x", cfg.x, "Initial corner coherence, 0 <= x <= 1/4")->check(positivity_range());
  app.add_option("--rate-a", cfg.rate_a, "Qubit dephasing rate")->check(CLI::NonNegativeNumber);
  app.add_option("--rate-b", cfg.rate_b, "Qutrit dephasing rate")->check(CLI::NonNegativeNumber);
  app.add_option("--t-max", cfg.t_max, "End of the time grid")->check(CLI::PositiveNumber);
  app.add_option("--steps", cfg.steps, "Number of grid points, endpoints included")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  app.add_option("--out", cfg.out, "Output file (stdout when omitted)");

  const std::pair<const char*, Mode> modes[] = {{"curve", Mode::Curve},
                                                {"esd-time", Mode::EsdTime},
                                                {"selfcheck", Mode::SelfCheck},
                                                {"dump-state", Mode::DumpState}};
  const char* const descriptions[] = {
      "Write the negativity curve as CSV",
      "Print the analytic and numeric disentanglement times",
      "Run the numeric-vs-analytic invariant checks",
      "Write the evolved state at t-max in the text matrix format"};
  std::vector<std::pair<CLI::App*, Mode>> subs;
  for (std::size_t i = 0; i < std::size(modes); ++i) {
    CLI::App* sub = app.add_subcommand(modes[i].first, descriptions[i]);
    sub->fallthrough();
    subs.emplace_back(sub, modes[i].second);
  }

  // CLI11 consumes a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string("error: ") + e.what() + "\n" + kUsageLine);
  }

  for (const auto& [sub, mode] : subs)
    if (sub->parsed()) cfg.mode = mode;
  cfg.scenario = kScenarioNames.at(scenario);
  return cfg;
}

void write_curve_csv(std::ostream& out, const EsdReport& report) {
  out << "t,gamma_a,gamma_b,corner,negativity_numeric,negativity_analytic,min_pt_eigenvalue\n";
  for (const auto& p : report.curve) {
    out << format17(p.t) << ',' << format17(p.gamma_a) << ',' << format17(p.gamma_b) << ','
        << format17(p.corner) << ',' << format17(p.negativity_numeric) << ','
        << format17(p.negativity_analytic) << ',' << format17(p.min_pt_eigenvalue) << '\n';
  }
}

namespace {

void write_esd_times(std::ostream& out, const Scenario& s) {
  const EsdTime analytic = analytic_esd_time(s);
  out << "scenario: " << to_string(s.kind) << '\n';
  out << "analytic: " << to_string(analytic) << '\n';
  if (analytic.kind == EsdTime::Kind::NoDeath) {
    out << "numeric: no-death\n";
    return;
  }
  const EsdTime numeric = numeric_esd_time(s);
  out << "numeric: " << to_string(numeric) << '\n';
  if (analytic.is_finite() && numeric.is_finite()) {
    out << "difference: " << format17(numeric.time - analytic.time) << '\n';
  }
}

int run_selfcheck_mode(const RunConfig& config, std::ostream& out) {
  const auto results = run_selfcheck(config.x, config.rate_a, config.rate_b);
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    if (r.passed) ++passed;
  }
  out << "selfcheck: " << passed << '/' << results.size() << " passed\n";
  return passed == results.size() ? kOk : kNumericFailure;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  const Scenario s = config.to_scenario();
  switch (config.mode) {
    case Mode::Curve:
      write_curve_csv(out, sweep(s, uniform_grid(config.t_max, config.steps)));
      return kOk;
    case Mode::EsdTime:
      write_esd_times(out, s);
      return kOk;
    case Mode::SelfCheck:
      return run_selfcheck_mode(config, out);
    case Mode::DumpState:
      write_state(out, evolve(s, config.t_max));
      return kOk;
  }
  return kUsage;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.to_scenario().validate();
    if (config.steps < 2 || !(config.t_max > 0.0)) {
      err << "error: --steps must be >= 2 and --t-max > 0\n";
      return kUsage;
    }
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (config.out.empty()) {
      const int code = dispatch(config, out);
      out.flush();
      return code;
    }
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open '" << config.out << "' for writing\n";
      return kIoError;
    }
    const int code = dispatch(config, file);
    file.close();
    if (!file) {
      err << "error: failed writing '" << config.out << "'\n";
      return kIoError;
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kOk;
  } catch (const UsageError& e) {
    err << e.what();
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace qqesd::cli
