#include "qqesd/esd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qqesd {

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::QubitOnly: return "qubit";
    case ScenarioKind::QutritOnly: return "qutrit";
    case ScenarioKind::MultiLocal: return "multilocal";
  }
  return "unknown";
}

void Scenario::validate() const {
  if (!(x >= 0.0 && x <= kMaxAnsatzX)) {
    throw InvalidParameterError("x = " + std::to_string(x) +
                                " is outside the positivity range 0 <= x <= 1/4");
  }
  if (!(std::isfinite(rate_a) && rate_a >= 0.0) || !(std::isfinite(rate_b) && rate_b >= 0.0)) {
    throw InvalidParameterError("dephasing rates must be finite and >= 0");
  }
}

double Scenario::effective_rate() const {
  switch (kind) {
    case ScenarioKind::QubitOnly: return rate_a;
    case ScenarioKind::QutritOnly: return rate_b;
    case ScenarioKind::MultiLocal: return rate_a + rate_b;
  }
  return 0.0;
}

double Scenario::gamma_a(double t) const {
  return kind == ScenarioKind::QutritOnly ? 1.0 : DephasingParams(rate_a, t).gamma();
}

double Scenario::gamma_b(double t) const {
  return kind == ScenarioKind::QubitOnly ? 1.0 : DephasingParams(rate_b, t).gamma();
}

std::string to_string(const EsdTime& t) {
  switch (t.kind) {
    case EsdTime::Kind::NeverEntangled: return "never-entangled";
    case EsdTime::Kind::NoDeath: return "no-death";
    case EsdTime::Kind::Finite: break;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", t.time);
  return buf;
}

double analytic_negativity(const Scenario& s, double t) {
  s.validate();
  return std::max(0.0, s.corner(t) - 0.125);
}

EsdTime analytic_esd_time(const Scenario& s) {
  s.validate();
  if (s.x <= 0.125) return EsdTime::never_entangled();
  const double rate = s.effective_rate();
  if (rate == 0.0) return EsdTime::no_death();
  return EsdTime::finite(2.0 * std::log(8.0 * s.x) / rate);
}

DensityMatrix evolve(const Scenario& s, double t) {
  s.validate();
  const DensityMatrix rho = ansatz_x(s.x);
  switch (s.kind) {
    case ScenarioKind::QubitOnly:
      return apply(dephasing_qubit(DephasingParams(s.rate_a, t)), rho);
    case ScenarioKind::QutritOnly:
      return apply(dephasing_qutrit(DephasingParams(s.rate_b, t)), rho);
    case ScenarioKind::MultiLocal:
      return apply_multilocal(dephasing_qubit(DephasingParams(s.rate_a, t)),
                              dephasing_qutrit(DephasingParams(s.rate_b, t)), rho);
  }
  return rho;
}

double default_bracket(const Scenario& s) {
  const double rate = s.effective_rate();
  const double single = 2.0 * std::numbers::ln2;
  return rate > 0.0 ? 10.0 * single / rate : 10.0 * single;
}

namespace {

bool entangled_at(const Scenario& s, double t) { return negativity(evolve(s, t)).is_entangled; }

}  // namespace

EsdTime numeric_esd_time(const Scenario& s, double t_max, double tol) {
  s.validate();
  if (!(t_max > 0.0) || !(tol > 0.0)) {
    throw InvalidParameterError("numeric_esd_time needs t_max > 0 and tol > 0");
  }
  if (!entangled_at(s, 0.0)) return EsdTime::never_entangled();
  if (entangled_at(s, t_max)) {
    throw BracketError("state is still entangled at t_max = " + std::to_string(t_max) +
                       "; retry with a larger t_max");
  }
  double lo = 0.0;
  double hi = t_max;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (entangled_at(s, mid) ? lo : hi) = mid;
  }
  return EsdTime::finite(hi);
}

EsdTime numeric_esd_time(const Scenario& s, double tol) {
  return numeric_esd_time(s, default_bracket(s), tol);
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
  if (steps < 2) throw InvalidParameterError("a time grid needs at least 2 points");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw InvalidParameterError("t_max must be > 0");
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  grid.back() = t_max;
  return grid;
}

EsdReport sweep(const Scenario& s, const std::vector<double>& t_grid) {
  s.validate();
  EsdReport report{s, {}, analytic_esd_time(s), {}};
  if (report.analytic_time.kind == EsdTime::Kind::NoDeath) {
    // No finite bracket exists; confirm the numeric side agrees on the far end.
    report.esd_time = entangled_at(s, default_bracket(s)) ? EsdTime::no_death()
                                                          : numeric_esd_time(s);
  } else {
    report.esd_time = numeric_esd_time(s);
  }

  report.curve.reserve(t_grid.size());
  for (double t : t_grid) {
    const DensityMatrix rho = evolve(s, t);
    const NegativityResult n = negativity(rho);
    report.curve.push_back({t, s.gamma_a(t), s.gamma_b(t), rho(0, 5).real(), n.value,
                            analytic_negativity(s, t), n.min_pt_eigenvalue});
  }
  return report;
}

}  // namespace qqesd
