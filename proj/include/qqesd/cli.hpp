#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qqesd/esd.hpp"

namespace qqesd::cli {

enum class Mode { Curve, EsdTime, SelfCheck, DumpState };

enum ExitCode : int { kOk = 0, kUsage = 1, kNumericFailure = 2, kIoError = 3 };

struct RunConfig {
  Mode mode = Mode::Curve;
  ScenarioKind scenario = ScenarioKind::QubitOnly;
  double x = 0.25;
  double rate_a = 1.0;
  double rate_b = 1.0;
  double t_max = 4.0;
  std::size_t steps = 101;
  std::string out;  // empty: stdout

  Scenario to_scenario() const { return {scenario, x, rate_a, rate_b}; }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Raised for --help; carries the help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

/// `args` excludes the program name. Throws UsageError naming the offending
/// flag, or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Header plus one row per curve point, 17 significant digits.
void write_curve_csv(std::ostream& out, const EsdReport& report);

/// Executes one configured run; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 1.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qqesd::cli
