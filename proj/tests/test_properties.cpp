// Seeded random instances. Circulants supply regular factors of any degree.
#include "doctest.h"

#include <random>

#include "prodspec/graph.hpp"
#include "prodspec/integrality.hpp"
#include "prodspec/invariants.hpp"
#include "prodspec/product.hpp"
#include "prodspec/spectra.hpp"
#include "oracles.hpp"

using namespace prodspec;

TEST_CASE("closed form equals direct on random circulant pairs") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n1 = 3 + rng() % 4, n2 = 3 + rng() % 3;
    auto g1 = oracle::random_circulant(rng, n1);
    auto g2 = oracle::random_circulant(rng, n2);
    auto p = product(g1, g2).graph;
    CAPTURE(to_graph6(g1));
    CAPTURE(to_graph6(g2));
    for (auto kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      auto closed = product_charpoly_closed(g1, g2, kind).poly;
      CHECK(closed == char_poly(kind_matrix(p, kind)));
      auto s = product_spectrum(g1, g2, kind);
      CHECK(s.total() == 2 * n1 * n2);
      CHECK(s.trace() == Rational(2 * static_cast<long>(p.size())));
      CHECK(s.approx_trace() == doctest::Approx(2.0 * p.size()).epsilon(1e-9));
      auto v = product_is_integral(g1, g2, kind);
      CHECK(v.direct.integral == v.structural.integral);
    }
  }
}

TEST_CASE("relabeling either factor leaves the closed forms unchanged") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    auto g1 = oracle::random_circulant(rng, 4 + rng() % 5);
    auto g2 = oracle::random_circulant(rng, 2 + rng() % 4);
    auto h1 = g1.relabeled(oracle::random_permutation(rng, g1.order()));
    auto h2 = g2.relabeled(oracle::random_permutation(rng, g2.order()));
    for (auto kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      auto base = product_charpoly_closed(g1, g2, kind).poly;
      CHECK(product_charpoly_closed(h1, g2, kind).poly == base);
      CHECK(product_charpoly_closed(g1, h2, kind).poly == base);
    }
    CHECK(char_poly(laplacian_matrix(product(h1, h2).graph)) == char_poly(laplacian_matrix(product(g1, g2).graph)));
  }
}

TEST_CASE("invariant closed forms on random circulant pairs") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 15; ++trial) {
    auto g1 = oracle::random_circulant(rng, 3 + rng() % 4);
    auto g2 = oracle::random_circulant(rng, 2 + rng() % 4);
    auto p = product(g1, g2).graph;
    CHECK(kirchhoff_product_closed(g1, g2).corrected == kirchhoff_exact(p));
    CHECK(spanning_trees_product_closed(g1, g2).corrected == spanning_trees_matrix_tree(p).count);
    auto w = wiener_product_closed(g1, g2);
    CHECK(w.derived == wiener_bfs(p));
    if (w.applicable) CHECK(w.square_variant == wiener_bfs(p));
  }
}

TEST_CASE("structure on random irregular pairs") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    auto g1 = oracle::random_graph(rng, 2 + rng() % 5, 0.6);
    auto g2 = oracle::random_graph(rng, 1 + rng() % 5, 0.5);
    auto p = product(g1, g2).graph;
    CHECK(p.size() == product_edge_count(g1, g2));
    CHECK(adjacency_matrix(p) == adjacency_blocks(g1, g2));
    if (!is_connected(g1)) continue;
    REQUIRE(is_connected(p));
    CHECK(wiener_product_closed(g1, g2).derived == BigInt(oracle::wiener(p)));
    CHECK(distance_blocks_corrected(g1, g2) == distance_matrix(p));
  }
}

TEST_CASE("matrix-tree cofactor is independent of the deleted vertex") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 8; ++trial) {
    auto g = oracle::random_graph(rng, 7, 0.5);
    auto l = laplacian_matrix(g);
    auto first = determinant(l.minor(0, 0));
    for (std::size_t v = 1; v < 7; ++v) CHECK(determinant(l.minor(v, v)) == first);
    CHECK(first == BigInt(std::to_string(oracle::spanning_trees(g))));
  }
}
