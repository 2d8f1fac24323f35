#include "doctest.h"

#include <cmath>
#include <random>

#include "prodspec/errors.hpp"
#include "prodspec/graph.hpp"
#include "prodspec/matrix.hpp"
#include "oracles.hpp"

using namespace prodspec;

namespace {

ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

ExactMatrix random_symmetric(std::mt19937& rng, std::size_t n) {
  auto m = random_matrix(rng, n, n, -4, 4);
  return m + m.transpose();
}

}  // namespace

TEST_CASE("determinant spot values") {
  CHECK(determinant(ExactMatrix::identity(3)) == 1);
  CHECK(determinant(ExactMatrix::ones(3, 3)) == 0);
  CHECK(determinant(ExactMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(ExactMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
  CHECK(determinant(ExactMatrix(0, 0)) == 1);
}

TEST_CASE("determinant agrees with rational elimination") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto m = random_matrix(rng, n, n, -9, 9);
    CHECK(Rational(determinant(m)) == oracle::det(oracle::to_rational(m)));
  }
}

TEST_CASE("kronecker identities") {
  std::mt19937 rng(2);
  auto a = random_matrix(rng, 2, 3, -3, 3);
  auto b = random_matrix(rng, 3, 2, -3, 3);
  auto c = random_matrix(rng, 3, 2, -3, 3);
  auto d = random_matrix(rng, 2, 3, -3, 3);
  CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  CHECK(kronecker(a, b).transpose() == kronecker(a.transpose(), b.transpose()));

  auto p = random_matrix(rng, 3, 3, -3, 3);
  auto q = random_matrix(rng, 2, 2, -3, 3);
  // det(P (x) Q) = det(P)^2 det(Q)^3
  BigInt dp = determinant(p), dq = determinant(q);
  CHECK(determinant(kronecker(p, q)) == dp * dp * dq * dq * dq);
  CHECK(kronecker(ExactMatrix::identity(2), ExactMatrix::ones(2, 2)) ==
        ExactMatrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
}

TEST_CASE("block matrix") {
  ExactMatrix a{{1}}, b{{2, 3}}, c{{4}, {5}}, d{{6, 7}, {8, 9}};
  CHECK(block_matrix(a, b, c, d) == ExactMatrix{{1, 2, 3}, {4, 6, 7}, {5, 8, 9}});
  CHECK_THROWS_AS(block_matrix(a, d, c, d), Error);
}

TEST_CASE("char poly spot values") {
  CHECK(char_poly(laplacian_matrix(parse_graph_spec("K3"))) == Polynomial{0, 9, -6, 1});
  CHECK(char_poly(ExactMatrix::identity(2)) == Polynomial{1, -2, 1});
  CHECK(char_poly(laplacian_matrix(parse_graph_spec("K2"))) == Polynomial{0, -2, 1});
}

TEST_CASE("char poly agrees with interpolation oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto m = trial % 2 ? random_symmetric(rng, n) : random_matrix(rng, n, n, -5, 5);
    auto f = char_poly(m);
    CHECK(f == oracle::char_poly(m));
    // f(t) = det(tI - M)
    for (long t : {-2L, 3L}) CHECK(f(Rational(t)) == Rational(determinant(ExactMatrix::identity(n) * BigInt(t) - m)));
  }
}

TEST_CASE("adjugate series satisfies (xI - M) adj = f(x) I") {
  std::mt19937 rng(4);
  for (std::size_t n : {1u, 2u, 4u, 6u}) {
    auto m = random_matrix(rng, n, n, -4, 4);
    auto fl = faddeev_leverrier(m);
    REQUIRE(fl.adjugate.size() == n);
    // coefficient of x^k in (xI - M) * sum B_j x^j is B_{k-1} - M B_k
    for (std::size_t k = 0; k <= n; ++k) {
      ExactMatrix lhs(n, n);
      if (k >= 1) lhs += fl.adjugate[k - 1];
      if (k < n) lhs -= m * fl.adjugate[k];
      CHECK(lhs == ExactMatrix::identity(n) * BigInt(fl.char_poly.coeff(k).get_num()));
    }
    CHECK(fl.char_poly == char_poly(m));
  }
}

TEST_CASE("jacobi eigenvalues") {
  auto lk3 = laplacian_matrix(parse_graph_spec("K3"));
  auto ev = symmetric_eigenvalues(lk3);
  REQUIRE(ev.size() == 3);
  CHECK(std::abs(ev[0].approx()) < 1e-12);
  CHECK(ev[1].approx() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(ev[2].approx() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(symmetric_eigenvalues(ExactMatrix{{1, 2}, {3, 4}}), Error);

  // trace and sum of squares are preserved
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto m = random_symmetric(rng, 12);
    auto vals = symmetric_eigenvalues(m);
    double tr = 0, sq = 0, fro = 0;
    for (auto& v : vals) {
      tr += v.approx();
      sq += v.approx() * v.approx();
    }
    for (auto& e : m.entries()) fro += e.get_d() * e.get_d();
    CHECK(tr == doctest::Approx(m.trace().get_d()).epsilon(1e-10));
    CHECK(sq == doctest::Approx(fro).epsilon(1e-10));
    // each eigenvalue is a root of the exact char poly
    auto f = char_poly(m);
    for (auto& v : vals) {
      double scale = 0;
      for (std::size_t k = 0; k <= 12; ++k) scale += std::abs(f.coeff(k).get_d()) * std::pow(std::abs(v.approx()), k);
      CHECK(std::abs(f.evaluate(v.approx())) <= 1e-8 * scale);
    }
  }
}
