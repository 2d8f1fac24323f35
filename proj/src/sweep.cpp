#include "prodspec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "prodspec/errors.hpp"
#include "prodspec/integrality.hpp"
#include "prodspec/invariants.hpp"
#include "prodspec/matrix.hpp"
#include "prodspec/product.hpp"
#include "prodspec/spectra.hpp"

namespace prodspec {

bool PairResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool SweepResult::passed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairResult& p) { return p.passed(); });
}

std::size_t SweepResult::failures() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairResult& p) { return !p.passed(); }));
}

std::vector<NamedGraph> default_sweep_set() {
  std::vector<NamedGraph> set;
  for (const char* spec : {"K2", "K3", "K4", "K5", "C3", "C4", "C5", "C6", "K2,2", "K3,3", "Q3"}) {
    set.push_back({spec, parse_graph_spec(spec)});
  }
  return set;
}

namespace {

// Runs `body`, turning exceptions into a failed check.
void run_check(PairResult& out, const std::string& name, const std::function<std::string(bool&)>& body) {
  CheckResult c{name, false, {}};
  try {
    c.detail = body(c.passed);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  out.checks.push_back(std::move(c));
}

bool within(double value, double expected, double tolerance) {
  return std::abs(value - expected) <= tolerance * std::max(1.0, std::abs(expected));
}

}  // namespace

PairResult check_pair(const NamedGraph& first, const NamedGraph& second, const SweepOptions& options) {
  auto start = std::chrono::steady_clock::now();
  const Graph& g1 = first.graph;
  const Graph& g2 = second.graph;
  PairResult out;
  out.first = first.name;
  out.second = second.name;
  out.order = 2 * g1.order() * g2.order();

  const auto prod = product(g1, g2);
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  const bool regular = degree_profile(g1).regularity && degree_profile(g2).regularity;
  const bool connected = is_connected(g1);
  const BigInt twice_edges = 2 * static_cast<unsigned long>(prod.graph.size());

  run_check(out, "edge_count", [&](bool& ok) {
    ok = prod.graph.size() == product_edge_count(g1, g2);
    return ok ? std::string() : "|E| = " + std::to_string(prod.graph.size());
  });
  run_check(out, "degrees", [&](bool& ok) {
    ok = true;
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t k = 0; k < n2; ++k) {
        ok = ok && prod.graph.degree(prod.labeling.index(Block::A, i, k)) == n2 * (g1.degree(i) + 1);
        ok = ok && prod.graph.degree(prod.labeling.index(Block::B, i, k)) == g2.degree(k) + n2;
      }
    return std::string();
  });
  run_check(out, "adjacency_blocks", [&](bool& ok) {
    ok = adjacency_blocks(g1, g2) == adjacency_matrix(prod.graph);
    return std::string();
  });

  Polynomial direct_l;
  if (regular) {
    for (MatrixKind kind : {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
      const std::string tag(kind_name(kind));
      const ExactMatrix m = kind_matrix(prod.graph, kind);
      Polynomial direct = char_poly(m);
      if (kind == MatrixKind::Laplacian) direct_l = direct;

      run_check(out, "charpoly_" + tag, [&](bool& ok) {
        ok = product_charpoly_closed(g1, g2, kind).poly == direct;
        return ok ? std::string() : "closed-form and direct polynomials differ";
      });

      Spectrum spectrum;
      run_check(out, "spectrum_accounting_" + tag, [&](bool& ok) {
        spectrum = product_spectrum(g1, g2, kind);
        bool trace_ok = spectrum.trace_is_rational() && spectrum.trace() == Rational(twice_edges);
        if (!spectrum.exact()) {
          trace_ok = trace_ok && within(spectrum.approx_trace(), twice_edges.get_d(), options.tolerance);
        }
        ok = spectrum.total() == out.order && trace_ok;
        std::ostringstream os;
        if (!ok) os << "total " << spectrum.total() << ", trace " << to_decimal(spectrum.trace());
        return os.str();
      });

      run_check(out, "jacobi_" + tag, [&](bool& ok) {
        auto numeric = symmetric_eigenvalues(m);
        auto exact = spectrum.flattened();
        ok = numeric.size() == exact.size();
        double worst = 0.0;
        for (std::size_t i = 0; ok && i < exact.size(); ++i) {
          double err = std::abs(numeric[i].approx() - exact[i]) / std::max(1.0, std::abs(exact[i]));
          worst = std::max(worst, err);
        }
        ok = ok && worst <= options.tolerance;
        std::ostringstream os;
        os << "max relative deviation " << worst;
        return ok ? std::string() : os.str();
      });

      run_check(out, "integrality_routes_" + tag, [&](bool& ok) {
        auto verdict = product_is_integral(g1, g2, kind);
        ok = verdict.direct.integral == verdict.structural.integral;
        return std::string(verdict.direct.integral ? "integral" : "not integral");
      });
    }

    if (n2 == 1) {
      run_check(out, "corona_reduction", [&](bool& ok) {
        ok = product_L_charpoly_closed(g1, g2) == char_poly(laplacian_matrix(corona(g1, g2)));
        return std::string();
      });
    }

    if (connected) {
      run_check(out, "kirchhoff", [&](bool& ok) {
        auto closed = kirchhoff_product_closed(g1, g2);
        auto oracle = kirchhoff_from_char_poly(direct_l, prod.graph.order());
        ok = closed.corrected == oracle;
        return "Kf = " + to_decimal(oracle);
      });
      if (options.include_verbatim) out.annotations.push_back("kirchhoff: printed formula non-finite (mu_11 = 0)");

      run_check(out, "spanning_trees", [&](bool& ok) {
        auto closed = spanning_trees_product_closed(g1, g2);
        BigInt cofactor = determinant(laplacian_matrix(prod.graph).minor(0, 0));
        BigInt coefficient = abs(direct_l.coeff(1).get_num()) / static_cast<unsigned long>(out.order);
        ok = closed.corrected == cofactor && cofactor == coefficient;
        if (options.include_verbatim && closed.verbatim != cofactor) {
          out.annotations.push_back("spanning_trees: printed product is 0, oracle " + to_decimal(cofactor));
        }
        return "t = " + to_decimal(cofactor);
      });
    }
  }

  if (connected) {
    run_check(out, "wiener", [&](bool& ok) {
      auto closed = wiener_product_closed(g1, g2);
      BigInt oracle = wiener_bfs(prod.graph);
      ok = closed.derived == oracle;
      if (closed.applicable) ok = ok && closed.square_variant && *closed.square_variant == oracle;
      if (options.include_verbatim) {
        if (closed.linear_variant && *closed.linear_variant != oracle) {
          out.annotations.push_back("wiener: 4 n2 variant " + to_decimal(*closed.linear_variant) +
                                    " != oracle " + to_decimal(oracle));
        }
        if (closed.square_variant && *closed.square_variant != oracle) {
          out.annotations.push_back("wiener: 4 n2^2 variant " + to_decimal(*closed.square_variant) +
                                    " != oracle " + to_decimal(oracle) + " (diam(G2) > 2)");
        }
      }
      return "W = " + to_decimal(oracle);
    });
  }

  out.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SweepResult run_sweep(const std::vector<NamedGraph>& graphs, const SweepOptions& options) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = 0; j < graphs.size(); ++j)
      if (2 * graphs[i].graph.order() * graphs[j].graph.order() <= options.max_order) pairs.emplace_back(i, j);

  SweepResult result;
  result.pairs.resize(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx = next++; idx < pairs.size(); idx = next++) {
      result.pairs[idx] = check_pair(graphs[pairs[idx].first], graphs[pairs[idx].second], options);
    }
  };
  unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return result;
}

}  // namespace prodspec
