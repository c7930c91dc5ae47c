#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "qqesd/linalg.hpp"

namespace qqesd {

/// Eigenvalues down to -kPsdTolerance still count as non-negative.
inline constexpr double kPsdTolerance = 1e-10;
/// Largest admissible coherence x of the one-parameter family.
inline constexpr double kMaxAnsatzX = 0.25;

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

enum class StateCondition { Shape, Hermiticity, UnitTrace, PositiveSemidefinite };

std::string to_string(StateCondition condition);

/// Why a matrix is not a density matrix, with the size of the violation.
struct StateViolation {
  StateCondition condition;
  double magnitude;
  std::string message() const;
};

class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(StateViolation violation)
      : Error(violation.message()), violation_(violation) {}
  const StateViolation& violation() const { return violation_; }

 private:
  StateViolation violation_;
};

/// Hermitian, unit-trace, positive semi-definite matrix on a bipartite space.
/// Instances can only be obtained through validation.
class DensityMatrix {
 public:
  /// Throws InvalidStateError naming the first violated condition.
  static DensityMatrix from_matrix(ComplexMatrix m, BipartiteDims dims = kQubitQutrit);

  const ComplexMatrix& matrix() const { return mat_; }
  BipartiteDims dims() const { return dims_; }
  std::size_t dim() const { return mat_.rows(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

 private:
  DensityMatrix(ComplexMatrix m, BipartiteDims dims) : mat_(std::move(m)), dims_(dims) {}
  friend std::variant<DensityMatrix, StateViolation> validate(const ComplexMatrix&, BipartiteDims);

  ComplexMatrix mat_;
  BipartiteDims dims_;
};

/// Checks the three density-matrix conditions in order: Hermiticity, unit
/// trace, positive semi-definiteness.
std::variant<DensityMatrix, StateViolation> validate(const ComplexMatrix& m,
                                                     BipartiteDims dims = kQubitQutrit);

/// The one-parameter family: diagonal (1/4, 1/8, 1/8, 1/8, 1/8, 1/4) with the
/// corner coherence at (|00>,|12>). Dephasing only ever shrinks the corner.
class AnsatzState {
 public:
  /// Requires 0 <= corner <= x <= 1/4.
  AnsatzState(double x, double corner);
  explicit AnsatzState(double x) : AnsatzState(x, x) {}

  double x() const { return x_; }
  double corner() const { return corner_; }
  DensityMatrix density() const;

 private:
  double x_;
  double corner_;
};

/// The 6x6 one-parameter state with corner coherence x. Throws
/// InvalidParameterError outside 0 <= x <= 1/4.
DensityMatrix ansatz_x(double x);

/// Real entries of the general incoherent-subsystem class: six populations
/// plus the six off-diagonal entries allowed by its zero pattern (1-based
/// labels as in rho_15 etc.).
struct AnsatzEntries {
  std::array<double, 6> diagonal{};
  double rho15 = 0.0;
  double rho16 = 0.0;
  double rho24 = 0.0;
  double rho26 = 0.0;
  double rho34 = 0.0;
  double rho35 = 0.0;
};

DensityMatrix ansatz_general(const AnsatzEntries& entries);

/// True when every entry outside the incoherent-subsystem pattern has
/// magnitude <= tol.
bool has_incoherent_pattern(const ComplexMatrix& m, double tol = 1e-14);

ComplexMatrix reduce_a(const DensityMatrix& rho);
ComplexMatrix reduce_b(const DensityMatrix& rho);

/// Plain-text state format: a `dims dA dB` header, then one row per line with
/// entries written as `re+imj`.
void write_state(std::ostream& out, const ComplexMatrix& m, BipartiteDims dims);
void write_state(std::ostream& out, const DensityMatrix& rho);

struct ParsedState {
  ComplexMatrix matrix;
  BipartiteDims dims;
};

/// Throws InvalidInputError on malformed text.
ParsedState read_state(std::istream& in);

/// Random full-rank state: G G^H / tr(G G^H) with complex Gaussian G.
DensityMatrix random_state(std::mt19937_64& rng, BipartiteDims dims = kQubitQutrit);
/// Random incoherent-subsystem state; off-diagonals are scaled to stay PSD.
DensityMatrix random_pattern_state(std::mt19937_64& rng);
/// Haar-ish random unitary from Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n);

}  // namespace qqesd
