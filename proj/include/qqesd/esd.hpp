#pragma once

// Entanglement sudden death on the one-parameter qubit-qutrit family under
// local dephasing: closed-form negativity curves and disentanglement times,
// numeric evolution through the Kraus pipeline, and time sweeps that put the
// two side by side.

#include <string>
#include <vector>

#include "qqesd/channels.hpp"
#include "qqesd/entanglement.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

enum class ScenarioKind { QubitOnly, QutritOnly, MultiLocal };

std::string to_string(ScenarioKind kind);

/// A dephasing experiment on the one-parameter family. QubitOnly ignores
/// rate_b and QutritOnly ignores rate_a.
struct Scenario {
  ScenarioKind kind = ScenarioKind::QubitOnly;
  double x = 0.25;
  double rate_a = 1.0;
  double rate_b = 1.0;

  /// Throws InvalidParameterError for x outside [0, 1/4] or a negative rate.
  void validate() const;
  /// Rate of decay of the corner coherence: rate_a, rate_b or their sum.
  double effective_rate() const;
  /// gamma_a(t), or 1 when the qubit is not dephased.
  double gamma_a(double t) const;
  /// gamma_b(t), or 1 when the qutrit is not dephased.
  double gamma_b(double t) const;
  /// x * gamma_a(t) * gamma_b(t): the corner coherence after time t.
  double corner(double t) const { return x * gamma_a(t) * gamma_b(t); }
};

class BracketError : public Error {
 public:
  using Error::Error;
};

/// When entanglement dies. NeverEntangled: N(0) = 0 (x <= 1/8).
/// NoDeath: entangled and the effective rate is zero, so it never decays.
struct EsdTime {
  enum class Kind { Finite, NeverEntangled, NoDeath };

  Kind kind = Kind::NeverEntangled;
  double time = 0.0;

  static EsdTime finite(double t) { return {Kind::Finite, t}; }
  static EsdTime never_entangled() { return {Kind::NeverEntangled, 0.0}; }
  static EsdTime no_death() { return {Kind::NoDeath, 0.0}; }
  bool is_finite() const { return kind == Kind::Finite; }
};

/// "never-entangled", "no-death" or the time with 17 significant digits.
std::string to_string(const EsdTime& t);

/// max{0, x g(t) - 1/8} with g the scenario's decay product.
double analytic_negativity(const Scenario& s, double t);

/// t* = 2 ln(8x) / effective_rate, derived from g(t*) = 1/(8x).
EsdTime analytic_esd_time(const Scenario& s);

/// ansatz_x(x) pushed through the scenario's dephasing channels for time t.
DensityMatrix evolve(const Scenario& s, double t);

/// 10 * (2 ln 2) / effective_rate; every ESD time on the family is below
/// 2 ln 2 / effective_rate.
double default_bracket(const Scenario& s);

/// Bisection on t -> negativity(evolve(s, t)) over [0, t_max] down to width
/// tol. Returns the upper end of the final bracket, where N = 0. Throws
/// BracketError if the state is still entangled at t_max.
EsdTime numeric_esd_time(const Scenario& s, double t_max, double tol);
EsdTime numeric_esd_time(const Scenario& s, double tol = 1e-12);

struct CurvePoint {
  double t;
  double gamma_a;
  double gamma_b;
  double corner;
  double negativity_numeric;
  double negativity_analytic;
  double min_pt_eigenvalue;
};

struct EsdReport {
  Scenario scenario;
  EsdTime esd_time;       // numeric
  EsdTime analytic_time;  // closed form
  std::vector<CurvePoint> curve;
};

/// Uniform grid of `steps` points including both 0 and t_max.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

/// One curve row per grid time (grid order preserved) plus both ESD times.
EsdReport sweep(const Scenario& s, const std::vector<double>& t_grid);

}  // namespace qqesd
