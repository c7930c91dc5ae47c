#include "qqesd/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qqesd {

namespace {

constexpr double kCurveTolerance = 1e-10;
constexpr double kEsdTimeTolerance = 1e-8;

std::string format_error(const char* label, double value) {
  std::ostringstream os;
  os.precision(3);
  os << label << ' ' << std::scientific << value;
  return os.str();
}

CheckResult check_curve(const Scenario& s) {
  const double rate = s.effective_rate();
  const double horizon = rate > 0.0 ? 5.0 / rate : 5.0;
  const EsdReport report = sweep(s, uniform_grid(horizon, 200));
  double worst = 0.0;
  for (const auto& p : report.curve) {
    worst = std::max(worst, std::abs(p.negativity_numeric - p.negativity_analytic));
  }
  return {to_string(s.kind) + ": numeric negativity matches max{0, x g(t) - 1/8}",
          worst < kCurveTolerance, format_error("max |dN| =", worst)};
}

CheckResult check_esd_time(const Scenario& s) {
  const EsdTime analytic = analytic_esd_time(s);
  const std::string name = to_string(s.kind) + ": numeric ESD time matches closed form";
  if (analytic.kind == EsdTime::Kind::NoDeath) {
    const bool alive = negativity(evolve(s, default_bracket(s))).is_entangled;
    return {name, alive, "no-death"};
  }
  const EsdTime numeric = numeric_esd_time(s);
  if (numeric.kind != analytic.kind) {
    return {name, false, "numeric " + to_string(numeric) + " vs analytic " + to_string(analytic)};
  }
  if (!numeric.is_finite()) return {name, true, to_string(numeric)};
  const double diff = std::abs(numeric.time - analytic.time);
  return {name, diff <= kEsdTimeTolerance, format_error("|dt*| =", diff)};
}

CheckResult check_pt_spectrum(const Scenario& s) {
  const double rate = s.effective_rate();
  const double horizon = rate > 0.0 ? 3.0 / rate : 3.0;
  double worst = 0.0;
  for (double t : uniform_grid(horizon, 7)) {
    const double c = s.corner(t);
    std::vector<double> expected{0.25, 0.25, 0.125, 0.125, (1 + 8 * c) / 8, (1 - 8 * c) / 8};
    std::sort(expected.begin(), expected.end());
    const auto got = pt_spectrum(evolve(s, t)).eigenvalues;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      worst = std::max(worst, std::abs(got[k] - expected[k]));
    }
  }
  return {to_string(s.kind) + ": partial-transpose spectrum matches closed form",
          worst < kCurveTolerance, format_error("max |dlambda| =", worst)};
}

CheckResult check_completeness(std::mt19937_64& rng, double rate_a, double rate_b) {
  std::uniform_real_distribution<double> time(0.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t = time(rng);
    worst = std::max(worst, dephasing_qubit(DephasingParams(rate_a, t)).completeness_error());
    worst = std::max(worst, dephasing_qutrit(DephasingParams(rate_b, t)).completeness_error());
  }
  return {"Kraus completeness of the dephasing channels", worst <= kHermitianTolerance,
          format_error("max deviation =", worst)};
}

CheckResult check_preservation(std::mt19937_64& rng, double rate_a, double rate_b) {
  std::uniform_real_distribution<double> time(0.0, 5.0);
  double worst_trace = 0.0;
  try {
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = random_state(rng);
      const DensityMatrix out =
          apply_multilocal(dephasing_qubit(DephasingParams(rate_a, time(rng))),
                           dephasing_qutrit(DephasingParams(rate_b, time(rng))), rho);
      worst_trace = std::max(worst_trace, std::abs(out.matrix().trace() - 1.0));
    }
  } catch (const InvalidStateError& e) {
    return {"channels preserve Hermiticity, trace and positivity", false, e.what()};
  }
  return {"channels preserve Hermiticity, trace and positivity", worst_trace <= kHermitianTolerance,
          format_error("max |tr - 1| =", worst_trace)};
}

CheckResult check_pattern_closure(std::mt19937_64& rng, double rate_a, double rate_b) {
  std::uniform_real_distribution<double> time(0.0, 5.0);
  bool closed = true;
  for (int i = 0; i < 20 && closed; ++i) {
    const DensityMatrix rho = random_pattern_state(rng);
    const auto qubit = dephasing_qubit(DephasingParams(rate_a, time(rng)));
    const auto qutrit = dephasing_qutrit(DephasingParams(rate_b, time(rng)));
    closed = has_incoherent_pattern(apply(qubit, rho).matrix()) &&
             has_incoherent_pattern(apply(qutrit, rho).matrix()) &&
             has_incoherent_pattern(apply_multilocal(qubit, qutrit, rho).matrix());
  }
  return {"incoherent-subsystem zero pattern is closed under dephasing", closed, ""};
}

CheckResult check_pt_symmetry(std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_state(rng);
    worst = std::max(worst, std::abs(negativity(rho, Subsystem::A).value -
                                     negativity(rho, Subsystem::B).value));
  }
  return {"negativity via PT_A equals negativity via PT_B", worst < kCurveTolerance,
          format_error("max |dN| =", worst)};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(double x, double rate_a, double rate_b, std::uint64_t seed) {
  std::vector<CheckResult> results;
  for (ScenarioKind kind :
       {ScenarioKind::QubitOnly, ScenarioKind::QutritOnly, ScenarioKind::MultiLocal}) {
    const Scenario s{kind, x, rate_a, rate_b};
    results.push_back(check_curve(s));
    results.push_back(check_esd_time(s));
    results.push_back(check_pt_spectrum(s));
  }
  std::mt19937_64 rng(seed);
  results.push_back(check_completeness(rng, rate_a, rate_b));
  results.push_back(check_preservation(rng, rate_a, rate_b));
  results.push_back(check_pattern_closure(rng, rate_a, rate_b));
  results.push_back(check_pt_symmetry(rng));
  return results;
}

}  // namespace qqesd
