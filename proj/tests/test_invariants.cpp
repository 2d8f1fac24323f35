#include "doctest.h"

#include "prodspec/errors.hpp"
#include "prodspec/graph.hpp"
#include "prodspec/invariants.hpp"
#include "prodspec/product.hpp"
#include "oracles.hpp"

using namespace prodspec;

namespace {

Graph P(const ProductGraph& p) { return p.graph; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("kirchhoff spot values") {
  CHECK(kirchhoff_exact(parse_graph_spec("K3")) == 2);
  CHECK(oracle::kirchhoff(parse_graph_spec("K3")) == 2);
  CHECK(kirchhoff_exact(parse_graph_spec("K5")) == 4);
  // path P_n: sum of pairwise distances
  CHECK(kirchhoff_exact(parse_graph_spec("P5")) == 20);

  auto k2 = parse_graph_spec("K2");
  auto p = P(product(k2, k2));
  CHECK(kirchhoff_exact(p) == 18);
  CHECK(oracle::kirchhoff(p) == 18);
  CHECK(kirchhoff_product_closed(k2, k2).corrected == 18);
  CHECK_FALSE(kirchhoff_product_closed(k2, k2).verbatim_finite);
}

TEST_CASE("kirchhoff closed form against resistance oracle") {
  for (auto [a, b] : {std::pair{"K2", "K3"}, {"C4", "K2"}, {"C5", "K2"}, {"K2", "C5"}, {"K3", "C4"}}) {
    auto g1 = parse_graph_spec(a), g2 = parse_graph_spec(b);
    auto closed = kirchhoff_product_closed(g1, g2);
    auto want = oracle::kirchhoff(P(product(g1, g2)));
    CHECK(closed.corrected == want);
    CHECK(kirchhoff_exact(P(product(g1, g2))) == want);
    bool irrational = std::string(a) == "C5" || std::string(b) == "C5";
    CHECK(closed.evaluation == (irrational ? "symmetric" : "termwise"));
  }
}

TEST_CASE("kirchhoff with a disconnected second factor") {
  Graph empty2(2, {});
  auto g1 = parse_graph_spec("C4");
  auto p = P(product(g1, empty2));
  REQUIRE(is_connected(p));
  CHECK(kirchhoff_product_closed(g1, empty2).corrected == oracle::kirchhoff(p));
  CHECK(kind_of([] { kirchhoff_exact(Graph(3, {{0, 1}})); }) == ErrorKind::Disconnected);
  CHECK(kind_of([&] { kirchhoff_product_closed(Graph(4, {{0, 1}, {2, 3}}), empty2); }) == ErrorKind::Disconnected);
}

TEST_CASE("spanning tree spot values") {
  CHECK(spanning_trees_matrix_tree(parse_graph_spec("K4")).count == 16);
  CHECK(oracle::spanning_trees(parse_graph_spec("K4")) == 16);
  CHECK(spanning_trees_matrix_tree(parse_graph_spec("C7")).count == 7);
  CHECK(spanning_trees_matrix_tree(parse_graph_spec("Q3")).count == 384);
  CHECK(spanning_trees_matrix_tree(parse_graph_spec("petersen")).count == 2000);

  auto k2 = parse_graph_spec("K2");
  auto p = P(product(k2, k2));
  auto mt = spanning_trees_matrix_tree(p);
  CHECK(mt.count == 1024);
  CHECK(mt.char_poly_route == 1024);
  CHECK(oracle::spanning_trees(p) == 1024);
  auto closed = spanning_trees_product_closed(k2, k2);
  CHECK(closed.corrected == 1024);
  CHECK(closed.verbatim == 0);

  auto two = spanning_trees_matrix_tree(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(two.count == 0);
  CHECK_FALSE(two.connected);
}

TEST_CASE("spanning tree closed form against enumeration") {
  // K2 (*) K1 is P4, K3 (*) K1 is the 3-sun
  for (auto [a, b] : {std::pair{"K2", "K1"}, {"K3", "K1"}, {"C4", "K1"}, {"K2", "K3"}}) {
    auto g1 = parse_graph_spec(a), g2 = parse_graph_spec(b);
    auto p = P(product(g1, g2));
    if (p.size() > 24) continue;
    CHECK(spanning_trees_product_closed(g1, g2).corrected == BigInt(std::to_string(oracle::spanning_trees(p))));
  }
  for (auto [a, b] : {std::pair{"C5", "K2"}, {"K2", "C5"}, {"K3,3", "C4"}}) {
    auto g1 = parse_graph_spec(a), g2 = parse_graph_spec(b);
    CHECK(spanning_trees_product_closed(g1, g2).corrected == spanning_trees_matrix_tree(P(product(g1, g2))).count);
  }
}

TEST_CASE("wiener") {
  auto k2 = parse_graph_spec("K2"), k3 = parse_graph_spec("K3"), p4 = parse_graph_spec("P4");
  CHECK(wiener_bfs(p4) == 10);
  CHECK(wiener_bfs(parse_graph_spec("petersen")) == 75);
  CHECK(truncated_wiener(p4) == 9);
  CHECK(truncated_wiener(Graph(3, {})) == 6);

  auto p = P(product(k2, k3));
  CHECK(wiener_bfs(p) == 108);
  CHECK(oracle::wiener(p) == 108);
  auto w = wiener_product_closed(k2, k3);
  CHECK(w.square_variant == BigInt(108));
  CHECK(w.linear_variant == BigInt(84));
  CHECK(w.derived == 108);
  CHECK(w.applicable);

  auto q = P(product(k2, p4));
  auto wp = wiener_product_closed(k2, p4);
  CHECK_FALSE(wp.applicable);
  CHECK(wp.derived == oracle::wiener(q));
  CHECK(wp.square_variant != BigInt(oracle::wiener(q)));

  // regularity not needed; disconnected second factor is fine
  Graph g2(3, {{0, 1}});
  auto wd = wiener_product_closed(p4, g2);
  CHECK(wd.derived == oracle::wiener(P(product(p4, g2))));
  CHECK_FALSE(wd.square_variant);
}

TEST_CASE("invariant reports") {
  auto reports = invariant_reports(parse_graph_spec("K2"), parse_graph_spec("K2"));
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].name == "kirchhoff");
  CHECK(reports[0].oracle_value == 18);
  CHECK(reports[0].corrected_matches_oracle == true);
  CHECK(reports[0].printed_non_finite);
  CHECK_FALSE(reports[0].printed_value);
  CHECK(reports[1].oracle_value == 1024);
  CHECK(reports[1].printed_value == Rational(0));
  CHECK(reports[1].printed_matches_oracle == false);
  CHECK(reports[2].oracle_value == 46);

  auto irregular = invariant_reports(parse_graph_spec("K2"), parse_graph_spec("P4"));
  CHECK_FALSE(irregular[0].corrected_value);
  CHECK_FALSE(irregular[1].corrected_value);
  CHECK(irregular[2].corrected_matches_oracle == true);
  CHECK(irregular[2].applicable == false);

  CHECK(kind_of([] { invariant_reports(Graph(2, {}), parse_graph_spec("K2")); }) == ErrorKind::Disconnected);
}
