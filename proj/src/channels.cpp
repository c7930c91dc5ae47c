#include "qqesd/channels.hpp"

#include <cmath>
#include <string>

namespace qqesd {

DephasingParams::DephasingParams(double rate, double t) : rate_(rate), t_(t) {
  if (!(std::isfinite(rate) && rate >= 0.0)) {
    throw InvalidParameterError("dephasing rate must be finite and >= 0, got " + std::to_string(rate));
  }
  if (!(std::isfinite(t) && t >= 0.0)) {
    throw InvalidParameterError("time must be finite and >= 0, got " + std::to_string(t));
  }
}

double DephasingParams::gamma() const { return std::exp(-t_ * rate_ / 2.0); }

double DephasingParams::omega() const {
  const double g = gamma();
  return std::sqrt(1.0 - g * g);
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)), dim_(0) {
  if (ops_.empty()) throw InvalidDimsError("a channel needs at least one Kraus operator");
  dim_ = ops_.front().rows();
  for (const auto& k : ops_) {
    if (!k.is_square() || k.rows() != dim_) {
      throw InvalidDimsError("Kraus operators must be square and share one dimension");
    }
  }
}

double KrausChannel::completeness_error() const {
  ComplexMatrix sum = ComplexMatrix::zeros(dim_);
  for (const auto& k : ops_) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(dim_));
}

KrausChannel KrausChannel::after(const KrausChannel& first) const {
  if (first.dim_ != dim_) throw InvalidDimsError("cannot compose channels of different dimension");
  std::vector<ComplexMatrix> ops;
  ops.reserve(ops_.size() * first.ops_.size());
  for (const auto& e : first.ops_)
    for (const auto& f : ops_) ops.push_back(f * e);
  return KrausChannel(std::move(ops));
}

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidParameterError("gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
}

ComplexMatrix real_diag(std::initializer_list<double> values) {
  return ComplexMatrix::real_diagonal(std::span<const double>(values.begin(), values.size()));
}

}  // namespace

KrausChannel dephasing_qubit_gamma(double gamma) {
  require_gamma(gamma);
  const double omega = std::sqrt(1.0 - gamma * gamma);
  const ComplexMatrix id3 = ComplexMatrix::identity(3);
  return KrausChannel({kron(real_diag({1.0, gamma}), id3), kron(real_diag({0.0, omega}), id3)});
}

KrausChannel dephasing_qubit(const DephasingParams& p) { return dephasing_qubit_gamma(p.gamma()); }

KrausChannel dephasing_qutrit_gamma(double gamma) {
  require_gamma(gamma);
  const double omega = std::sqrt(1.0 - gamma * gamma);
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  return KrausChannel({kron(id2, real_diag({1.0, gamma, gamma})),
                       kron(id2, real_diag({0.0, omega, 0.0})),
                       kron(id2, real_diag({0.0, 0.0, omega}))});
}

KrausChannel dephasing_qutrit(const DephasingParams& p) { return dephasing_qutrit_gamma(p.gamma()); }

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    throw InvalidDimsError("channel acts on dimension " + std::to_string(channel.dim()) +
                           ", state has dimension " + std::to_string(rho.dim()));
  }
  const double err = channel.completeness_error();
  if (!(err <= kHermitianTolerance)) {
    throw CompletenessError("Kraus operators violate sum K^H K = I by " + std::to_string(err));
  }
  ComplexMatrix out = ComplexMatrix::zeros(rho.dim());
  for (const auto& k : channel.ops()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::from_matrix(std::move(out), rho.dims());
}

DensityMatrix apply_multilocal(const KrausChannel& channel_a, const KrausChannel& channel_b,
                               const DensityMatrix& rho) {
  for (const KrausChannel* ch : {&channel_a, &channel_b}) {
    const double err = ch->completeness_error();
    if (!(err <= kHermitianTolerance)) {
      throw CompletenessError("Kraus operators violate sum K^H K = I by " + std::to_string(err));
    }
  }
  return apply(channel_b.after(channel_a), rho);
}

}  // namespace qqesd
