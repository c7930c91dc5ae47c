#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qqesd/channels.hpp"
#include "qqesd/entanglement.hpp"
#include "test_support.hpp"

using namespace qqesd;
using qqesd::testing::block_eigenvalues;
using qqesd::testing::literal_ansatz;

TEST_CASE("pt_spectrum") {
  const auto spec = pt_spectrum(ansatz_x(0.25), Subsystem::A);
  CHECK(spec.transposed == Subsystem::A);
  const std::vector<double> expected{-0.125, 0.125, 0.125, 0.25, 0.25, 0.375};
  CHECK(testing::max_abs_diff(spec.eigenvalues, expected) < 1e-14);

  // Oracle: the partial transpose splits into 1x1 blocks plus one 2x2 block.
  const auto pt = partial_transpose(literal_ansatz(0.25), kQubitQutrit, Subsystem::A);
  CHECK(testing::max_abs_diff(spec.eigenvalues, block_eigenvalues(pt)) < 1e-14);

  double sum = 0.0;
  for (double v : spec.eigenvalues) sum += v;
  CHECK(std::abs(sum - 1.0) < 1e-10);

  const auto diag = ansatz_x(0.0);
  CHECK(testing::max_abs_diff(pt_spectrum(diag).eigenvalues, hermitian_eigenvalues(diag.matrix())) < 1e-15);

  CHECK(std::abs(pt_spectrum(ansatz_x(0.125)).eigenvalues.front()) < 1e-15);
}

TEST_CASE("negativity") {
  const auto zero = negativity(ansatz_x(0.0));
  CHECK(zero.value == 0.0);
  CHECK_FALSE(zero.is_entangled);

  // Oracle: block spectrum of the partial transpose, summed by hand.
  double oracle = 0.0;
  for (double v : block_eigenvalues(partial_transpose(literal_ansatz(0.25), kQubitQutrit, Subsystem::A)))
    if (v < 0) oracle -= v;
  const auto top = negativity(ansatz_x(0.25));
  CHECK(std::abs(top.value - oracle) < 1e-14);
  CHECK(std::abs(top.value - 0.125) < 1e-14);
  CHECK(top.is_entangled);
  CHECK(std::abs(top.min_pt_eigenvalue + 0.125) < 1e-14);

  const auto boundary = negativity(ansatz_x(0.125));
  CHECK(boundary.value == 0.0);
  CHECK_FALSE(boundary.is_entangled);

  SUBCASE("sub-threshold eigenvalues count as zero") {
    const auto near = negativity(ansatz_x(0.125 + 5e-11));
    CHECK(near.min_pt_eigenvalue < 0.0);
    CHECK(near.value == 0.0);
    CHECK_FALSE(near.is_entangled);
    const auto above = negativity(ansatz_x(0.125 + 5e-10));
    CHECK(above.is_entangled);
    CHECK(std::abs(above.value - 5e-10) < 1e-15);
  }

  SUBCASE("PT over A or B gives the same negativity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
      const auto s = random_state(rng);
      CHECK(std::abs(negativity(s, Subsystem::A).value - negativity(s, Subsystem::B).value) < 1e-10);
    }
  }

  SUBCASE("invariant under local unitaries") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 50; ++i) {
      const auto s = i % 2 == 0 ? random_state(rng) : ansatz_x(0.25 * (i % 7) / 6.0);
      const auto u = kron(random_unitary(rng, 2), random_unitary(rng, 3));
      const auto rotated = DensityMatrix::from_matrix(u * s.matrix() * u.adjoint());
      CHECK(std::abs(negativity(s).value - negativity(rotated).value) < 1e-10);
    }
  }

  SUBCASE("a product state is separable, a Bell-like state is not") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) {
      const auto pa = random_state(rng, BipartiteDims{1, 2});
      const auto pb = random_state(rng, BipartiteDims{1, 3});
      const auto prod = DensityMatrix::from_matrix(kron(pa.matrix(), pb.matrix()));
      CHECK(negativity(prod).value == 0.0);
      CHECK(is_ppt(prod));
    }
    // (|00> + |11>)/sqrt(2): negativity 1/2 in this normalization.
    ComplexMatrix bell(6, 6);
    bell(0, 0) = bell(0, 4) = bell(4, 0) = bell(4, 4) = 0.5;
    const auto n = negativity(DensityMatrix::from_matrix(bell));
    CHECK(std::abs(n.value - 0.5) < 1e-12);
  }
}

TEST_CASE("is_ppt") {
  CHECK_FALSE(is_ppt(ansatz_x(0.2)));
  CHECK(is_ppt(ansatz_x(0.1)));
  CHECK(is_ppt(ansatz_x(0.125)));
  CHECK(is_ppt(DensityMatrix::from_matrix(ComplexMatrix::identity(6) * (1.0 / 6.0))));
}

TEST_CASE("negativity follows the corner along dephasing") {
  for (double x : {0.05, 0.125, 0.15, 0.2, 0.25}) {
    double previous = INFINITY;
    for (int i = 0; i <= 60; ++i) {
      const double t = 0.05 * i;
      const DephasingParams pa(1.0, t);
      const DephasingParams pb(0.5, t);
      const auto s = apply_multilocal(dephasing_qubit(pa), dephasing_qutrit(pb), ansatz_x(x));
      const double corner = s(0, 5).real();
      const double n = negativity(s).value;
      CHECK(std::abs(n - std::max(0.0, corner - 0.125)) < 1e-10);
      CHECK(n <= previous);
      previous = n;
    }
  }
}
