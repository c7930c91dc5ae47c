#pragma once

#include <vector>

#include "qqesd/linalg.hpp"
#include "qqesd/states.hpp"

namespace qqesd {

class CompletenessError : public Error {
 public:
  using Error::Error;
};

/// Local exponential dephasing at rate `rate` (inverse time) observed at time `t`.
class DephasingParams {
 public:
  /// Throws InvalidParameterError for negative or non-finite rate or time.
  DephasingParams(double rate, double t);

  double rate() const { return rate_; }
  double t() const { return t_; }
  /// gamma(t) = exp(-t * rate / 2), in (0, 1].
  double gamma() const;
  /// omega(t) = sqrt(1 - gamma^2), in [0, 1).
  double omega() const;

 private:
  double rate_;
  double t_;
};

/// Operator-sum channel rho -> sum_k K_k rho K_k^H. Completeness is not
/// enforced at construction; apply() refuses channels that violate it.
class KrausChannel {
 public:
  /// Operators must be square and share one dimension.
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  std::size_t dim() const { return dim_; }

  /// max-norm of sum_k K_k^H K_k - I.
  double completeness_error() const;
  bool is_complete(double tol = kHermitianTolerance) const { return completeness_error() <= tol; }

  /// ops ordered as {K_j L_i} for j over this channel and i over `first`.
  KrausChannel after(const KrausChannel& first) const;

 private:
  std::vector<ComplexMatrix> ops_;
  std::size_t dim_;
};

/// Qubit phase damping on the 2x3 space: E1 = diag(1, gamma) (x) I3, E2 = diag(0, omega) (x) I3.
KrausChannel dephasing_qubit(const DephasingParams& p);
/// Same operators parameterized directly by gamma in [0, 1].
KrausChannel dephasing_qubit_gamma(double gamma);

/// Qutrit phase damping with equal decay of levels 1 and 2 relative to 0:
/// F1 = I2 (x) diag(1, gamma, gamma), F2 = I2 (x) diag(0, omega, 0),
/// F3 = I2 (x) diag(0, 0, omega).
KrausChannel dephasing_qutrit(const DephasingParams& p);
KrausChannel dephasing_qutrit_gamma(double gamma);

/// Throws InvalidDimsError on dimension mismatch and CompletenessError when
/// the channel is not trace preserving within kHermitianTolerance.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// sum_i sum_j F_j E_i rho E_i^H F_j^H for independent local channels
/// E (on A) and F (on B).
DensityMatrix apply_multilocal(const KrausChannel& channel_a, const KrausChannel& channel_b,
                               const DensityMatrix& rho);

}  // namespace qqesd
