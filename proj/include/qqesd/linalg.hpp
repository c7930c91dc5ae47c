#pragma once

// Dense complex matrix kernel for small bipartite systems.
//
// Composite indices follow the A-major convention i = dB * a + b, so the
// 2x3 qubit-qutrit space is laid out as |00>,|01>,|02>,|10>,|11>,|12>.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qqesd {

using Complex = std::complex<double>;

/// Structural tolerance (Hermiticity, trace, completeness).
inline constexpr double kHermitianTolerance = 1e-12;
/// Tolerance for comparing spectra.
inline constexpr double kSpectralTolerance = 1e-10;

/// Base for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimsError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

enum class Subsystem { A, B };

struct BipartiteDims {
  std::size_t a = 2;
  std::size_t b = 3;

  std::size_t total() const { return a * b; }
  std::size_t index(std::size_t ia, std::size_t ib) const { return b * ia + ib; }
  bool operator==(const BipartiteDims&) const = default;
};

inline constexpr BipartiteDims kQubitQutrit{2, 3};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  static ComplexMatrix diagonal(std::initializer_list<Complex> values);
  static ComplexMatrix real_diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;

  /// Entrywise max-norm of the matrix.
  double max_abs() const;
  double frobenius_norm() const;
  /// max |m(i,j) - conj(m(j,i))|; infinite for non-square input.
  double hermiticity_error() const;
  bool is_hermitian(double tol = kHermitianTolerance) const {
    return hermiticity_error() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);

/// Entrywise max-norm distance; infinite when shapes differ.
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
bool approx_equal(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double eps);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the indices of one tensor factor. Throws InvalidDimsError when
/// the matrix is not square of dimension dims.total().
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem subsystem);

/// Traces out the factor not named by `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep);

/// All eigenvalues of a Hermitian matrix in ascending order, by cyclic
/// complex Jacobi rotations. Throws InvalidInputError if m is not Hermitian
/// within kHermitianTolerance.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qqesd
