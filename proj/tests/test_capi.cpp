#include "doctest.h"

#include <string>

#include "prodspec/prodspec.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { ps_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

ps_graph* load(const char* spec) {
  ps_graph* g = nullptr;
  REQUIRE(ps_graph_from_spec(spec, &g) == PS_OK);
  return g;
}

}  // namespace

TEST_CASE("graph handles") {
  ps_graph* g = load("petersen");
  CHECK(ps_graph_order(g) == 10);
  CHECK(ps_graph_size(g) == 15);
  CHECK(ps_graph_regularity(g) == 3);
  CHECK(ps_graph_is_connected(g) == 1);
  Owned g6;
  CHECK(ps_graph_encode(g, PS_ENCODING_GRAPH6, &g6.p) == PS_OK);
  CHECK(g6.str() == "IheA@GUAo\n");
  ps_graph_free(g);

  ps_graph* p4 = nullptr;
  long n = 4;
  CHECK(ps_graph_family("path", &n, 1, &p4) == PS_OK);
  CHECK(ps_graph_regularity(p4) == -1);
  ps_graph_free(p4);

  ps_graph* e = nullptr;
  CHECK(ps_graph_from_edge_list("3\n0 1\n1 2\n", &e) == PS_OK);
  CHECK(ps_graph_size(e) == 2);
  ps_graph_free(e);
  CHECK(ps_graph_from_graph6("Bw", &e) == PS_OK);
  CHECK(ps_graph_size(e) == 3);
  ps_graph_free(e);
}

TEST_CASE("error reporting") {
  ps_graph* g = nullptr;
  CHECK(ps_graph_from_spec("K", &g) == PS_PARSE_ERROR);
  CHECK(g == nullptr);
  CHECK(std::string(ps_last_error()).size() > 0);
  CHECK(ps_graph_from_spec(nullptr, &g) == PS_INVALID_ARGUMENT);
  CHECK(ps_graph_from_edge_list("2\n0 0\n", &g) == PS_PARSE_ERROR);

  ps_graph* p3 = load("P3");
  ps_graph* k2 = load("K2");
  Owned out;
  CHECK(ps_closed_char_poly(p3, k2, PS_KIND_L, &out.p) == PS_PRECONDITION);
  Owned w;
  ps_graph* two = nullptr;
  REQUIRE(ps_graph_from_edge_list("2\n", &two) == PS_OK);
  CHECK(ps_wiener(two, &w.p) == PS_DISCONNECTED);
  CHECK(ps_spanning_trees(two, &w.p) == PS_DISCONNECTED);
  Owned inv;
  CHECK(ps_invariants_report(two, k2, PS_FORMAT_JSON, &inv.p) == PS_DISCONNECTED);
  ps_graph_free(two);
  ps_graph_free(p3);
  ps_graph_free(k2);
}

TEST_CASE("products and polynomials") {
  ps_graph* k2 = load("K2");
  ps_graph* k3 = load("K3");
  ps_graph* p = nullptr;
  REQUIRE(ps_product(k2, k3, &p) == PS_OK);
  CHECK(ps_graph_order(p) == 12);
  CHECK(ps_graph_size(p) == 33);

  Owned direct, closed;
  CHECK(ps_char_poly(p, PS_KIND_Q, &direct.p) == PS_OK);
  CHECK(ps_closed_char_poly(k2, k3, PS_KIND_Q, &closed.p) == PS_OK);
  CHECK(direct.str() == closed.str());

  Owned w, t, kf;
  CHECK(ps_wiener(p, &w.p) == PS_OK);
  CHECK(w.str() == "108");
  CHECK(ps_spanning_trees(p, &t.p) == PS_OK);
  CHECK(t.str() == "15116544");
  CHECK(ps_kirchhoff(p, &kf.p) == PS_OK);
  CHECK(kf.str() == "26");

  Owned labels;
  CHECK(ps_product_labeling(k2, k3, &labels.p) == PS_OK);
  CHECK(labels.str().find("\"schema\": 1") != std::string::npos);

  ps_graph* c = nullptr;
  ps_graph* k1 = load("K1");
  REQUIRE(ps_corona(k2, k1, &c) == PS_OK);
  CHECK(ps_graph_size(c) == 3);
  ps_graph_free(c);
  ps_graph_free(k1);

  int integral = -1;
  CHECK(ps_is_integral(p, PS_KIND_L, &integral) == PS_OK);
  CHECK(integral == 0);

  Owned report;
  CHECK(ps_integrality_report(k2, k2, PS_KIND_L, PS_FORMAT_PLAIN, &report.p) == PS_OK);
  CHECK(report.str().find("witness discriminant: 32") != std::string::npos);
  ps_graph_free(p);
  ps_graph_free(k2);
  ps_graph_free(k3);
}

TEST_CASE("verify over a custom set") {
  ps_graph* gs[2] = {load("K2"), load("C4")};
  const char* names[2] = {"K2", "C4"};
  ps_sweep_options opts{0, 2, 0, 0};
  Owned report, timings;
  CHECK(ps_verify(gs, names, 2, &opts, PS_FORMAT_CSV, &report.p, &timings.p) == PS_OK);
  CHECK(report.str().find("C4,K2") != std::string::npos);
  CHECK(timings.str().size() > 0);

  ps_sweep_options small{8, 1, 0, 0};
  Owned r8;
  CHECK(ps_verify(gs, names, 2, &small, PS_FORMAT_JSON, &r8.p, nullptr) == PS_OK);
  CHECK(r8.str().find("\"pairs_checked\": 1") != std::string::npos);
  ps_graph_free(gs[0]);
  ps_graph_free(gs[1]);
}
