#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prodspec/graph.hpp"

namespace prodspec {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// K2..K5, C3..C6, K2,2, K3,3, Q3.
std::vector<NamedGraph> default_sweep_set();

struct SweepOptions {
  std::size_t max_order = 60;      // bound on 2 n1 n2
  unsigned jobs = 1;
  double tolerance = 1e-9;         // relative, numeric eigenvalue comparison
  bool include_verbatim = false;   // also list mismatches of the printed formulas
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PairResult {
  std::string first;
  std::string second;
  std::size_t order = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> annotations;  // expected verbatim-formula mismatches
  double milliseconds = 0.0;

  bool passed() const;
};

struct SweepResult {
  std::vector<PairResult> pairs;
  bool passed() const;
  std::size_t failures() const;
};

// Every ordered pair with 2 n1 n2 <= max_order. Checks on each pair:
// closed-vs-direct char polys (L, Q), edge count, block adjacency, spectrum
// accounting, Kirchhoff/spanning-tree/Wiener oracle agreement, integrality
// route agreement and the Jacobi cross-check. Closed-form checks are skipped
// for irregular factors. Pairs are evaluated on `jobs` workers and reported
// in input order.
SweepResult run_sweep(const std::vector<NamedGraph>& graphs, const SweepOptions& options);

// Runs the checks for a single ordered pair.
PairResult check_pair(const NamedGraph& first, const NamedGraph& second, const SweepOptions& options);

}  // namespace prodspec
