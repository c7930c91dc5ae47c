#include "qqesd/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace qqesd {

std::string to_string(StateCondition condition) {
  switch (condition) {
    case StateCondition::Shape: return "shape";
    case StateCondition::Hermiticity: return "hermiticity";
    case StateCondition::UnitTrace: return "unit-trace";
    case StateCondition::PositiveSemidefinite: return "positive-semidefinite";
  }
  return "unknown";
}

std::string StateViolation::message() const {
  std::ostringstream os;
  os.precision(6);
  switch (condition) {
    case StateCondition::Shape:
      os << "matrix shape does not match the declared dimensions";
      break;
    case StateCondition::Hermiticity:
      os << "hermiticity violated: max |m_ij - conj(m_ji)| = " << magnitude;
      break;
    case StateCondition::UnitTrace:
      os << "unit-trace violated: |tr(m) - 1| = " << magnitude;
      break;
    case StateCondition::PositiveSemidefinite:
      os << "positive-semidefinite violated: negative eigenvalue " << -magnitude;
      break;
  }
  return os.str();
}

std::variant<DensityMatrix, StateViolation> validate(const ComplexMatrix& m, BipartiteDims dims) {
  if (!m.is_square() || dims.a == 0 || dims.b == 0 || m.rows() != dims.total()) {
    return StateViolation{StateCondition::Shape, 0.0};
  }
  const double herm = m.hermiticity_error();
  if (!(herm <= kHermitianTolerance)) return StateViolation{StateCondition::Hermiticity, herm};

  const double trace_err = std::abs(m.trace() - 1.0);
  if (!(trace_err <= kHermitianTolerance)) return StateViolation{StateCondition::UnitTrace, trace_err};

  const double min_eig = hermitian_eigenvalues(m).front();
  if (min_eig < -kPsdTolerance) return StateViolation{StateCondition::PositiveSemidefinite, -min_eig};

  return DensityMatrix(m, dims);
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, BipartiteDims dims) {
  auto result = validate(m, dims);
  if (auto* violation = std::get_if<StateViolation>(&result)) throw InvalidStateError(*violation);
  return std::get<DensityMatrix>(std::move(result));
}

namespace {

constexpr std::array<double, 6> kAnsatzDiagonal{0.25, 0.125, 0.125, 0.125, 0.125, 0.25};

// 0-based (row, col) positions of the upper-triangle entries allowed by the
// incoherent-subsystem zero pattern.
constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kPatternPositions{
    {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}}};

bool in_range(double x) { return x >= 0.0 && x <= kMaxAnsatzX; }

ComplexMatrix ansatz_matrix(double corner) {
  ComplexMatrix m = ComplexMatrix::real_diagonal(kAnsatzDiagonal);
  m(0, 5) = corner;
  m(5, 0) = corner;
  return m;
}

}  // namespace

AnsatzState::AnsatzState(double x, double corner) : x_(x), corner_(corner) {
  if (!in_range(x)) {
    throw InvalidParameterError("x = " + std::to_string(x) +
                                " is outside the positivity range 0 <= x <= 1/4");
  }
  if (!(corner >= 0.0 && corner <= x)) {
    throw InvalidParameterError("corner coherence must satisfy 0 <= corner <= x");
  }
}

DensityMatrix AnsatzState::density() const {
  return DensityMatrix::from_matrix(ansatz_matrix(corner_), kQubitQutrit);
}

DensityMatrix ansatz_x(double x) { return AnsatzState(x).density(); }

DensityMatrix ansatz_general(const AnsatzEntries& entries) {
  ComplexMatrix m = ComplexMatrix::real_diagonal(entries.diagonal);
  const std::array<double, 6> values{entries.rho15, entries.rho16, entries.rho24,
                                     entries.rho26, entries.rho34, entries.rho35};
  for (std::size_t k = 0; k < kPatternPositions.size(); ++k) {
    const auto [r, c] = kPatternPositions[k];
    m(r, c) = values[k];
    m(c, r) = values[k];
  }
  return DensityMatrix::from_matrix(std::move(m), kQubitQutrit);
}

bool has_incoherent_pattern(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.rows() != 6) return false;
  auto allowed = [](std::size_t r, std::size_t c) {
    if (r == c) return true;
    const auto lo = std::min(r, c);
    const auto hi = std::max(r, c);
    return std::find(kPatternPositions.begin(), kPatternPositions.end(), std::pair{lo, hi}) !=
           kPatternPositions.end();
  };
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      if (!allowed(r, c) && std::abs(m(r, c)) > tol) return false;
  return true;
}

ComplexMatrix reduce_a(const DensityMatrix& rho) {
  return partial_trace(rho.matrix(), rho.dims(), Subsystem::A);
}

ComplexMatrix reduce_b(const DensityMatrix& rho) {
  return partial_trace(rho.matrix(), rho.dims(), Subsystem::B);
}

void write_state(std::ostream& out, const ComplexMatrix& m, BipartiteDims dims) {
  out << "dims " << dims.a << ' ' << dims.b << '\n';
  char buf[96];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(r, c).real(), m(r, c).imag());
      if (c != 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  write_state(out, rho.matrix(), rho.dims());
}

namespace {

Complex parse_entry(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double re = std::strtod(begin, &end);
  if (end == begin || (*end != '+' && *end != '-')) {
    throw InvalidInputError("malformed matrix entry '" + token + "'");
  }
  const char* im_begin = end;
  const double im = std::strtod(im_begin, &end);
  if (end == im_begin || *end != 'j' || *(end + 1) != '\0') {
    throw InvalidInputError("malformed matrix entry '" + token + "'");
  }
  return {re, im};
}

}  // namespace

ParsedState read_state(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInputError("missing dims header");
  std::istringstream header(line);
  std::string tag;
  long long da = 0;
  long long db = 0;
  if (!(header >> tag >> da >> db) || tag != "dims" || da <= 0 || db <= 0) {
    throw InvalidInputError("expected header 'dims dA dB', got '" + line + "'");
  }
  BipartiteDims dims{static_cast<std::size_t>(da), static_cast<std::size_t>(db)};
  const std::size_t n = dims.total();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(in, line)) throw InvalidInputError("expected " + std::to_string(n) + " rows");
    std::istringstream row(line);
    std::string token;
    std::size_t count = 0;
    while (row >> token) {
      entries.push_back(parse_entry(token));
      ++count;
    }
    if (count != n) {
      throw InvalidInputError("row " + std::to_string(r) + " has " + std::to_string(count) +
                              " entries, expected " + std::to_string(n));
    }
  }
  return {ComplexMatrix(n, n, std::move(entries)), dims};
}

namespace {

ComplexMatrix gaussian_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = {re, im};
    }
  return g;
}

}  // namespace

DensityMatrix random_state(std::mt19937_64& rng, BipartiteDims dims) {
  const ComplexMatrix g = gaussian_matrix(rng, dims.total());
  ComplexMatrix m = g * g.adjoint();
  m *= 1.0 / m.trace().real();
  // Remove rounding asymmetry from the product.
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix::from_matrix(std::move(m), dims);
}

DensityMatrix random_pattern_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  AnsatzEntries e;
  double total = 0.0;
  for (auto& d : e.diagonal) {
    d = 0.05 + unit(rng);
    total += d;
  }
  for (auto& d : e.diagonal) d /= total;
  // Off-diagonals bounded by the smallest population keep the matrix
  // diagonally dominant, hence PSD.
  const double bound = *std::min_element(e.diagonal.begin(), e.diagonal.end()) / 2.0;
  e.rho15 = bound * sym(rng);
  e.rho16 = bound * sym(rng);
  e.rho24 = bound * sym(rng);
  e.rho26 = bound * sym(rng);
  e.rho34 = bound * sym(rng);
  e.rho35 = bound * sym(rng);
  return ansatz_general(e);
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix u = gaussian_matrix(rng, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex overlap = 0.0;
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(u(r, prev)) * u(r, c);
      for (std::size_t r = 0; r < n; ++r) u(r, c) -= overlap * u(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(u(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) u(r, c) /= norm;
  }
  return u;
}

}  // namespace qqesd
