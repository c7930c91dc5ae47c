#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qqesd/states.hpp"
#include "test_support.hpp"

using namespace qqesd;
using qqesd::testing::literal_ansatz;

namespace {

ComplexMatrix real_diag(std::initializer_list<double> v) {
  return ComplexMatrix::real_diagonal(std::span<const double>(v.begin(), v.size()));
}

StateViolation rejection(const ComplexMatrix& m) {
  auto result = validate(m);
  REQUIRE(std::holds_alternative<StateViolation>(result));
  return std::get<StateViolation>(result);
}

}  // namespace

TEST_CASE("ansatz_x") {
  CHECK(approx_equal(ansatz_x(0.0).matrix(), real_diag({0.25, 0.125, 0.125, 0.125, 0.125, 0.25}), 0.0));
  CHECK(approx_equal(ansatz_x(0.2).matrix(), literal_ansatz(0.2), 0.0));

  const auto eig = hermitian_eigenvalues(ansatz_x(0.25).matrix());
  const std::vector<double> expected{0.0, 0.125, 0.125, 0.125, 0.125, 0.5};
  CHECK(testing::max_abs_diff(eig, expected) < 1e-14);

  CHECK_THROWS_AS(ansatz_x(0.26), InvalidParameterError);
  CHECK_THROWS_AS(ansatz_x(-1e-9), InvalidParameterError);
  CHECK_THROWS_AS(ansatz_x(NAN), InvalidParameterError);

  SUBCASE("every x on a grid is a valid state") {
    for (int i = 0; i <= 100; ++i) {
      const double x = 0.25 * i / 100.0;
      CHECK(std::holds_alternative<DensityMatrix>(validate(literal_ansatz(x))));
      CHECK_NOTHROW(ansatz_x(x));
    }
  }
}

TEST_CASE("AnsatzState") {
  const AnsatzState s(0.2, 0.1);
  CHECK(s.x() == 0.2);
  CHECK(s.corner() == 0.1);
  CHECK(approx_equal(s.density().matrix(), literal_ansatz(0.1), 0.0));
  CHECK_THROWS_AS(AnsatzState(0.2, 0.21), InvalidParameterError);
  CHECK_THROWS_AS(AnsatzState(0.2, -0.01), InvalidParameterError);
  CHECK_THROWS_AS(AnsatzState(0.3, 0.1), InvalidParameterError);
}

TEST_CASE("ansatz_general") {
  AnsatzEntries mixed;
  mixed.diagonal.fill(1.0 / 6.0);
  CHECK(approx_equal(ansatz_general(mixed).matrix(), ComplexMatrix::identity(6) * (1.0 / 6.0), 1e-16));

  AnsatzEntries family;
  family.diagonal = {0.25, 0.125, 0.125, 0.125, 0.125, 0.25};
  family.rho16 = 0.2;
  CHECK(approx_equal(ansatz_general(family).matrix(), ansatz_x(0.2).matrix(), 0.0));

  SUBCASE("extended class with rho15 = rho16 = rho26 = 0.1") {
    AnsatzEntries e = family;
    e.rho15 = e.rho16 = e.rho26 = 0.1;
    const DensityMatrix rho = ansatz_general(e);
    CHECK(testing::cholesky_positive_definite(rho.matrix()));
    // Smallest eigenvalue frozen from an independent LAPACK computation.
    CHECK(std::abs(hermitian_eigenvalues(rho.matrix()).front() - 0.03672177814626812) < 1e-12);
    CHECK(has_incoherent_pattern(rho.matrix()));
  }

  SUBCASE("rejects non-states") {
    AnsatzEntries bad = family;
    bad.rho16 = 0.3;
    CHECK_THROWS_AS(ansatz_general(bad), InvalidStateError);
    AnsatzEntries trace = family;
    trace.diagonal[0] = 0.3;
    try {
      ansatz_general(trace);
      FAIL("expected InvalidStateError");
    } catch (const InvalidStateError& e) {
      CHECK(e.violation().condition == StateCondition::UnitTrace);
    }
  }
}

TEST_CASE("reductions") {
  for (double x : {0.0, 0.1, 0.2, 0.25}) {
    CHECK(approx_equal(reduce_a(ansatz_x(x)), real_diag({0.5, 0.5}), 0.0));
    CHECK(approx_equal(reduce_b(ansatz_x(x)), real_diag({0.375, 0.25, 0.375}), 0.0));
  }
  AnsatzEntries mixed;
  mixed.diagonal.fill(1.0 / 6.0);
  const auto rho = ansatz_general(mixed);
  CHECK(approx_equal(reduce_a(rho), real_diag({0.5, 0.5}), 1e-15));
  CHECK(approx_equal(reduce_b(rho), real_diag({1.0 / 3, 1.0 / 3, 1.0 / 3}), 1e-15));

  SUBCASE("incoherent-subsystem states have diagonal reductions") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix s = random_pattern_state(rng);
      const auto ra = reduce_a(s);
      const auto rb = reduce_b(s);
      CHECK(std::abs(ra(0, 1)) < 1e-14);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          if (r != c) CHECK(std::abs(rb(r, c)) < 1e-14);
      CHECK(std::abs(ra.trace() - 1.0) < 1e-12);
      CHECK(std::abs(rb.trace() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("validate") {
  CHECK(std::holds_alternative<DensityMatrix>(validate(literal_ansatz(0.25))));

  SUBCASE("negative eigenvalue is reported") {
    const auto v = rejection(literal_ansatz(0.3));
    CHECK(v.condition == StateCondition::PositiveSemidefinite);
    // Oracle: the {|00>,|12>} block [[1/4, .3], [.3, 1/4]] has roots 1/4 +- 0.3.
    const auto block = testing::charpoly_roots_2x2(ComplexMatrix{{0.25, 0.3}, {0.3, 0.25}});
    CHECK(std::abs(v.magnitude + block.front()) < 1e-12);
    CHECK(std::abs(v.magnitude - 0.05) < 1e-12);
    CHECK(v.message().find("positive-semidefinite") != std::string::npos);
  }

  SUBCASE("trace") {
    auto m = literal_ansatz(0.0);
    m *= 0.9;
    const auto v = rejection(m);
    CHECK(v.condition == StateCondition::UnitTrace);
    CHECK(std::abs(v.magnitude - 0.1) < 1e-12);
  }

  SUBCASE("hermiticity") {
    auto m = literal_ansatz(0.1);
    m(0, 5) = 0.11;
    const auto v = rejection(m);
    CHECK(v.condition == StateCondition::Hermiticity);
    CHECK(std::abs(v.magnitude - 0.01) < 1e-12);
  }

  SUBCASE("shape") {
    CHECK(rejection(ComplexMatrix::identity(4) * 0.25).condition == StateCondition::Shape);
    CHECK(std::holds_alternative<DensityMatrix>(
        validate(ComplexMatrix::identity(4) * 0.25, BipartiteDims{2, 2})));
  }

  SUBCASE("complex states are accepted") {
    std::mt19937_64 rng(12);
    const auto rho = random_state(rng);
    CHECK(std::holds_alternative<DensityMatrix>(validate(rho.matrix())));
  }
}

TEST_CASE("text format") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_state(rng);
    std::stringstream ss;
    write_state(ss, rho);
    const ParsedState parsed = read_state(ss);
    CHECK(parsed.dims == rho.dims());
    CHECK(approx_equal(parsed.matrix, rho.matrix(), 0.0));
  }

  std::ostringstream os;
  write_state(os, ansatz_x(0.25));
  const std::string text = os.str();
  CHECK(text.rfind("dims 2 3\n", 0) == 0);
  CHECK(text.find("0.25+0j 0+0j 0+0j 0+0j 0+0j 0.25+0j\n") != std::string::npos);

  SUBCASE("malformed input") {
    std::istringstream no_header("2 3\n");
    CHECK_THROWS_AS(read_state(no_header), InvalidInputError);
    std::istringstream short_rows("dims 1 2\n1+0j 0+0j\n");
    CHECK_THROWS_AS(read_state(short_rows), InvalidInputError);
    std::istringstream bad_entry("dims 1 1\n1.0\n");
    CHECK_THROWS_AS(read_state(bad_entry), InvalidInputError);
    std::istringstream missing_j("dims 1 1\n1+0\n");
    CHECK_THROWS_AS(read_state(missing_j), InvalidInputError);
    std::istringstream ok("dims 1 1\n1e-05-2.5e+00j\n");
    CHECK(read_state(ok).matrix(0, 0) == Complex{1e-5, -2.5});
  }
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = random_unitary(rng, 3);
    CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(3)) < 1e-13);
    CHECK(has_incoherent_pattern(random_pattern_state(rng).matrix(), 0.0));
  }
}
