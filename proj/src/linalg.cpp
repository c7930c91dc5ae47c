#include "qqesd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qqesd {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidDimsError("entry count " + std::to_string(data_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidDimsError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> values) {
  return diagonal(std::span<const Complex>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::real_diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
  return sum;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_error() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      const double d = std::abs((*this)(r, c) - std::conj((*this)(c, r)));
      // NaN entries must never pass a Hermiticity check.
      if (std::isnan(d)) return std::numeric_limits<double>::infinity();
      err = std::max(err, d);
    }
  }
  return err;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidDimsError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidDimsError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw InvalidDimsError("shape mismatch in *");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return std::numeric_limits<double>::infinity();
  return (lhs - rhs).max_abs();
}

bool approx_equal(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double eps) {
  return max_abs_diff(lhs, rhs) <= eps;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows();
  const std::size_t cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

void require_bipartite(const ComplexMatrix& m, BipartiteDims dims) {
  if (dims.a == 0 || dims.b == 0) throw InvalidDimsError("factor dimensions must be positive");
  if (!m.is_square() || m.rows() != dims.total()) {
    throw InvalidDimsError("matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected square of dimension " +
                           std::to_string(dims.total()));
  }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims, Subsystem subsystem) {
  require_bipartite(m, dims);
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t a = 0; a < dims.a; ++a)
    for (std::size_t b = 0; b < dims.b; ++b)
      for (std::size_t a2 = 0; a2 < dims.a; ++a2)
        for (std::size_t b2 = 0; b2 < dims.b; ++b2) {
          const std::size_t row = dims.index(a, b);
          const std::size_t col = dims.index(a2, b2);
          out(row, col) = subsystem == Subsystem::A ? m(dims.index(a2, b), dims.index(a, b2))
                                                    : m(dims.index(a, b2), dims.index(a2, b));
        }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims, Subsystem keep) {
  require_bipartite(m, dims);
  if (keep == Subsystem::A) {
    ComplexMatrix out(dims.a, dims.a);
    for (std::size_t a = 0; a < dims.a; ++a)
      for (std::size_t a2 = 0; a2 < dims.a; ++a2)
        for (std::size_t b = 0; b < dims.b; ++b) out(a, a2) += m(dims.index(a, b), dims.index(a2, b));
    return out;
  }
  ComplexMatrix out(dims.b, dims.b);
  for (std::size_t b = 0; b < dims.b; ++b)
    for (std::size_t b2 = 0; b2 < dims.b; ++b2)
      for (std::size_t a = 0; a < dims.a; ++a) out(b, b2) += m(dims.index(a, b), dims.index(a, b2));
  return out;
}

namespace {

constexpr double kJacobiOffDiagonalTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

// Annihilates m(p,q) with the similarity U^H m U, U = diag phase * real rotation.
void jacobi_rotate(ComplexMatrix& m, std::size_t p, std::size_t q) {
  const std::size_t n = m.rows();
  const Complex apq = m(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  // Phase the q-th basis vector so that m(p,q) becomes real and positive.
  const Complex phase = apq / r;
  for (std::size_t k = 0; k < n; ++k) m(k, q) *= std::conj(phase);
  for (std::size_t k = 0; k < n; ++k) m(q, k) *= phase;

  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  double t = 0.0;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex kp = m(k, p);
    const Complex kq = m(k, q);
    m(k, p) = c * kp - s * kq;
    m(k, q) = s * kp + c * kq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex pk = m(p, k);
    const Complex qk = m(q, k);
    m(p, k) = c * pk - s * qk;
    m(q, k) = s * pk + c * qk;
  }
  m(p, p) = app - t * r;
  m(q, q) = aqq + t * r;
  m(p, q) = 0.0;
  m(q, p) = 0.0;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw InvalidInputError("eigenvalues requested for a non-square matrix");
  const double herm_err = m.hermiticity_error();
  if (!(herm_err <= kHermitianTolerance)) {
    throw InvalidInputError("matrix is not Hermitian (max |m_ij - conj(m_ji)| = " +
                            std::to_string(herm_err) + ")");
  }
  const std::size_t n = m.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix work = 0.5 * (m + m.adjoint());
  const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, work.frobenius_norm());

  int sweep = 0;
  while (off_diagonal_norm(work) >= threshold) {
    if (++sweep > kJacobiMaxSweeps) throw Error("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(work, p, q);
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = work(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace qqesd
