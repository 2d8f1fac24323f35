#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prodspec/graph.hpp"
#include "prodspec/numbers.hpp"
#include "prodspec/polynomial.hpp"

namespace prodspec {

// n * sum of 1/mu over nonzero Laplacian eigenvalues, taken from the char
// poly x q(x) as -n q'(0)/q(0). Error(Disconnected) if g is disconnected,
// Error(Precondition) when n < 2.
Rational kirchhoff_exact(const Graph& g);

// Same quantity from an already computed f(L) of a graph on `order` vertices.
Rational kirchhoff_from_char_poly(const Polynomial& laplacian_char_poly, std::size_t order);

struct KirchhoffClosed {
  Rational corrected;
  // The printed middle sum starts at the zero eigenvalue, so the verbatim
  // value never exists; kept explicit for the report.
  bool verbatim_finite = false;
  // "termwise" when both factor spectra are integral, otherwise
  // "symmetric" (sums of reciprocals from char poly coefficients).
  std::string evaluation;
};

// Product Kirchhoff index from the factor data, with the i = 1 term of the
// middle sum replaced by 1/(2 n2). Requires regular factors and a connected
// first factor.
KirchhoffClosed kirchhoff_product_closed(const Graph& first, const Graph& second);

struct SpanningTreeCount {
  BigInt count;            // Matrix-Tree cofactor
  BigInt char_poly_route;  // |coefficient of x in f(L)| / n
  bool connected = true;
};

// Zero with connected = false for disconnected input.
SpanningTreeCount spanning_trees_matrix_tree(const Graph& g);

struct SpanningTreesClosed {
  BigInt corrected;
  BigInt verbatim;  // contains the mu = 0 factor, so always 0
  std::string evaluation;
};

// Corrected closed form: the zero factor n2^2 mu_11 becomes 2 n2.
SpanningTreesClosed spanning_trees_product_closed(const Graph& first, const Graph& second);

// Sum of all-pairs BFS distances. Error(Disconnected) if disconnected.
BigInt wiener_bfs(const Graph& g);

// Sum over pairs of min(d(p,q), 2), unreachable pairs counted as 2.
BigInt truncated_wiener(const Graph& g);

struct WienerClosed {
  // 4 n2^2 W1 + n1 W2 + n1 n2 (2 n1 n2 - 1); absent when W2 is undefined.
  std::optional<BigInt> square_variant;
  // 4 n2 W1 + ...; absent when W2 is undefined.
  std::optional<BigInt> linear_variant;
  // 4 n2^2 W1 + n1 W2' + ..., W2' = truncated_wiener(second).
  BigInt derived;
  // diam(second) <= 2, where W2' = W2 and the square variant is exact.
  bool applicable = false;
};

// Requires a connected first factor; regularity is not needed.
WienerClosed wiener_product_closed(const Graph& first, const Graph& second);

struct InvariantReport {
  std::string name;  // kirchhoff | spanning_trees | wiener
  // Value of the formula as printed; nullopt when it is non-finite or
  // undefined (see printed_route).
  std::optional<Rational> printed_value;
  std::string printed_route;
  bool printed_non_finite = false;  // printed formula divides by zero
  // Repaired closed form; nullopt when its hypotheses (regular factors) fail,
  // with the reason in `note`.
  std::optional<Rational> corrected_value;
  std::string corrected_route;
  Rational oracle_value;
  std::string oracle_route;
  std::optional<bool> corrected_matches_oracle;
  std::optional<bool> printed_matches_oracle;
  std::string note;

  // Wiener only: the 4 n2 coefficient variant and the diam <= 2 flag.
  std::optional<Rational> linear_variant_value;
  std::optional<bool> linear_variant_matches_oracle;
  std::optional<bool> applicable;
};

// Kirchhoff, spanning trees and Wiener, in that order. Oracles run on the
// explicit product and need a connected first factor (Error(Disconnected)
// otherwise). Closed forms that need regular factors are left empty for
// irregular input instead of failing the whole report.
std::vector<InvariantReport> invariant_reports(const Graph& first, const Graph& second);

}  // namespace prodspec
