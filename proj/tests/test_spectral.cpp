#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "skewinfo/error.hpp"
#include "skewinfo/spectral.hpp"

using namespace skewinfo;

namespace {

double orthonormality_defect(const SpectralDecomposition& s) {
  const ComplexMatrix g = adjoint(s.eigenvectors) * s.eigenvectors;
  double worst = 0.0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

void check_invariants(const ComplexMatrix& m, const SpectralDecomposition& s) {
  CHECK(frobenius_distance(s.reconstruct(), m) <= 1e-10 * std::max(1.0, frobenius_norm(m)));
  CHECK(orthonormality_defect(s) <= 1e-10);
  for (std::size_t j = 1; j < s.dim(); ++j) CHECK(s.eigenvalues[j - 1] >= s.eigenvalues[j]);
}

ComplexMatrix random_psd(std::size_t n, Rng& rng) {
  const ComplexMatrix g = oracle::random_hermitian(n, rng);
  ComplexMatrix p = hermitian_part(g * g);
  for (std::size_t i = 0; i < n; ++i) p(i, i) += 0.05;
  return p;
}

}  // namespace

TEST_CASE("hermitian_eig on a diagonal matrix") {
  const double d[] = {0.25, 0.75};
  const SpectralDecomposition s = hermitian_eig(ComplexMatrix::diagonal(d));
  CHECK(s.eigenvalues[0] == 0.75);
  CHECK(s.eigenvalues[1] == 0.25);
  CHECK(s.component(1, 0) == Complex(1.0, 0.0));
  CHECK(s.component(0, 1) == Complex(1.0, 0.0));
  CHECK(std::abs(s.component(0, 0)) == 0.0);
}

TEST_CASE("hermitian_eig on (1/10)[[5,4],[4,5]] matches the characteristic polynomial") {
  const ComplexMatrix m{{0.5, 0.4}, {0.4, 0.5}};
  const auto roots = oracle::eigenvalues_2x2(m);
  REQUIRE(roots[0] == doctest::Approx(0.9).epsilon(1e-15));
  REQUIRE(roots[1] == doctest::Approx(0.1).epsilon(1e-15));

  const SpectralDecomposition s = hermitian_eig(m);
  CHECK(std::abs(s.eigenvalues[0] - roots[0]) <= 1e-14);
  CHECK(std::abs(s.eigenvalues[1] - roots[1]) <= 1e-14);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.component(0, 0) - r) <= 1e-14);
  CHECK(std::abs(s.component(1, 0) - r) <= 1e-14);
  // Phase convention: the largest-magnitude component is real positive; for
  // (1, -1)/√2 that is the first one (first index wins ties).
  CHECK(std::abs(s.component(0, 1) - r) <= 1e-14);
  CHECK(std::abs(s.component(1, 1) + r) <= 1e-14);
  check_invariants(m, s);
}

TEST_CASE("hermitian_eig on the identity") {
  for (std::size_t n : {1u, 2u, 5u}) {
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const SpectralDecomposition s = hermitian_eig(id);
    for (double l : s.eigenvalues) CHECK(l == 1.0);
    check_invariants(id, s);
  }
}

TEST_CASE("hermitian_eig on 1000 random Hermitian matrices per dimension") {
  Rng rng(2024);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int k = 0; k < 1000; ++k) {
      const ComplexMatrix m = oracle::random_hermitian(n, rng);
      check_invariants(m, hermitian_eig(m));
    }
  }
}

TEST_CASE("hermitian_eig eigenvalues of 2x2 complex matrices match the closed form") {
  Rng rng(99);
  for (int k = 0; k < 200; ++k) {
    const ComplexMatrix m = oracle::random_hermitian(2, rng);
    const auto roots = oracle::eigenvalues_2x2(m);
    const SpectralDecomposition s = hermitian_eig(m);
    CHECK(std::abs(s.eigenvalues[0] - roots[0]) <= 1e-12);
    CHECK(std::abs(s.eigenvalues[1] - roots[1]) <= 1e-12);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(hermitian_eig(m), Error);
  try {
    hermitian_eig(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  m(1, 0) = 1.0 + 5e-11;  // inside tolerance
  CHECK_NOTHROW(hermitian_eig(m));
}

TEST_CASE("hermitian_eig reports NoConvergence when the sweep budget is exhausted") {
  Rng rng(5);
  const ComplexMatrix m = oracle::random_hermitian(6, rng);
  try {
    hermitian_eig(m, JacobiOptions{1e-12, 0});
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("matrix_power examples") {
  const double d[] = {0.25, 0.75};
  const ComplexMatrix root = matrix_power(hermitian_eig(ComplexMatrix::diagonal(d)), 0.5);
  CHECK(std::abs(root(0, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(root(1, 1) - std::sqrt(3.0) / 2.0) <= 1e-15);
  CHECK(std::abs(root(0, 1)) == 0.0);

  for (std::size_t n : {2u, 3u, 7u}) {
    const ComplexMatrix mixed = (1.0 / static_cast<double>(n)) * ComplexMatrix::identity(n);
    const ComplexMatrix r = matrix_power(hermitian_eig(mixed), 0.5);
    const ComplexMatrix expected = (1.0 / std::sqrt(static_cast<double>(n))) * ComplexMatrix::identity(n);
    CHECK(frobenius_distance(r, expected) <= 1e-14);
  }

  const ComplexMatrix m{{0.5, 0.4}, {0.4, 0.5}};
  const ComplexMatrix r = matrix_power(hermitian_eig(m), 0.5);
  const double on = std::sqrt(0.9) / 2 + std::sqrt(0.1) / 2;
  const double off = std::sqrt(0.9) / 2 - std::sqrt(0.1) / 2;
  CHECK(std::abs(r(0, 0) - on) <= 1e-14);
  CHECK(std::abs(r(1, 1) - on) <= 1e-14);
  CHECK(std::abs(r(0, 1) - off) <= 1e-14);
  CHECK(frobenius_distance(r, oracle::sqrt_2x2(m)) <= 1e-14);
}

TEST_CASE("matrix_power squares back and splits into complementary powers") {
  Rng rng(31);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int k = 0; k < 50; ++k) {
      const ComplexMatrix p = random_psd(n, rng);
      const SpectralDecomposition s = hermitian_eig(p);
      const ComplexMatrix root = matrix_power(s, 0.5);
      CHECK(frobenius_distance(root * root, p) <= 1e-9);
      CHECK(frobenius_distance(root, oracle::sqrt_denman_beavers(p)) <= 1e-9);
      for (double alpha : {0.1, 0.25, 0.5, 0.9}) {
        const ComplexMatrix prod = matrix_power(s, alpha) * matrix_power(s, 1.0 - alpha);
        CHECK(frobenius_distance(prod, p) <= 1e-9);
      }
    }
  }
}

TEST_CASE("matrix_power clamps roundoff negatives and rejects real ones") {
  const double tiny[] = {1.0, -5e-11};
  const ComplexMatrix r = matrix_power(hermitian_eig(ComplexMatrix::diagonal(tiny)), 0.5);
  CHECK(r(1, 1) == Complex(0.0, 0.0));

  const double bad[] = {1.0, -1e-6};
  try {
    matrix_power(hermitian_eig(ComplexMatrix::diagonal(bad)), 0.5);
    FAIL("expected NegativeSpectrum");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeSpectrum);
  }
  CHECK_THROWS_AS(matrix_power(hermitian_eig(ComplexMatrix::identity(2)), 0.0), Error);
  CHECK_THROWS_AS(matrix_power(hermitian_eig(ComplexMatrix::identity(2)), 1.5), Error);
}
