// Test-only reference implementations. None of these reuse the library's
// algorithms: determinants by rational Gaussian elimination, char polys by
// interpolation, spanning trees by enumeration, distances by Floyd-Warshall.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "prodspec/graph.hpp"
#include "prodspec/matrix.hpp"
#include "prodspec/numbers.hpp"
#include "prodspec/polynomial.hpp"

namespace oracle {

using prodspec::BigInt;
using prodspec::ExactMatrix;
using prodspec::Graph;
using prodspec::Polynomial;
using prodspec::Rational;
using RMatrix = std::vector<std::vector<Rational>>;

inline RMatrix to_rational(const ExactMatrix& m) {
  RMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

inline Rational det(RMatrix a) {
  const std::size_t n = a.size();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      result = -result;
    }
    result *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return result;
}

inline RMatrix inverse(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// det(tI - M) at t = 0..n, then Lagrange interpolation.
inline Polynomial char_poly(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  Polynomial result;
  std::vector<Rational> values;
  for (std::size_t t = 0; t <= n; ++t) {
    RMatrix a = to_rational(m);
    for (auto& row : a)
      for (auto& v : row) v = -v;
    for (std::size_t i = 0; i < n; ++i) a[i][i] += static_cast<long>(t);
    values.push_back(det(std::move(a)));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    Polynomial basis = Polynomial::constant(values[i]);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis *= Polynomial::linear(Rational(static_cast<long>(j)));
      basis *= Rational(1) / Rational(static_cast<long>(i) - static_cast<long>(j));
    }
    result += basis;
  }
  return result;
}

inline bool is_spanning_tree(std::size_t n, const std::vector<Graph::Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : edges) {
    auto a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Enumerates all (n-1)-edge subsets. Small graphs only.
inline unsigned long long spanning_trees(const Graph& g) {
  const std::size_t n = g.order(), m = g.size();
  if (n <= 1) return 1;
  if (m < n - 1) return 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
  unsigned long long count = 0;
  do {
    std::vector<Graph::Edge> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) chosen.push_back(g.edges()[i]);
    if (is_spanning_tree(n, chosen)) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

// Kf = n tr(L^+), with L^+ = (L + J/n)^{-1} - J/n.
inline Rational kirchhoff(const Graph& g) {
  const std::size_t n = g.order();
  RMatrix a = to_rational(prodspec::laplacian_matrix(g));
  Rational jn(1, static_cast<long>(n));
  for (auto& row : a)
    for (auto& v : row) v += jn;
  RMatrix inv = inverse(std::move(a));
  Rational tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += inv[i][i] - jn;
  return tr * static_cast<long>(n);
}

inline std::vector<std::vector<long>> floyd_warshall(const Graph& g) {
  const long inf = 1L << 40;
  const std::size_t n = g.order();
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline long wiener(const Graph& g) {
  auto d = floyd_warshall(g);
  long w = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) w += d[i][j];
  return w;
}

// Adjacency of the product straight from the vertex definition.
inline bool product_adjacent(const Graph& g1, const Graph& g2, std::size_t u, std::size_t v) {
  const std::size_t n1 = g1.order(), n2 = g2.order();
  auto decode = [&](std::size_t x) {
    bool b = x >= n1 * n2;
    std::size_t r = b ? x - n1 * n2 : x;
    return std::tuple<bool, std::size_t, std::size_t>{b, r / n2, r % n2};
  };
  auto [bu, iu, ku] = decode(u);
  auto [bv, iv, kv] = decode(v);
  if (u == v) return false;
  if (!bu && !bv) return g1.has_edge(iu, iv);
  if (bu && bv) return iu == iv && g2.has_edge(ku, kv);
  return iu == iv;
}

// Connected circulant on n vertices with a random symmetric connection set.
inline Graph random_circulant(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> jumps{1};
  for (std::size_t s = 2; s <= n / 2; ++s)
    if (rng() % 2) jumps.push_back(s);
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (auto s : jumps) {
      std::size_t w = (v + s) % n;
      edges.push_back({std::min(v, w), std::max(v, w)});
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
