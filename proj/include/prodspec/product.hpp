#pragma once

#include <cstddef>

#include "prodspec/graph.hpp"
#include "prodspec/matrix.hpp"

namespace prodspec {

enum class Block : char { A = 'a', B = 'b' };

struct ProductLabel {
  Block block;
  std::size_t i;  // factor-1 vertex, 0-based
  std::size_t k;  // factor-2 vertex, 0-based
};

// a(i,k) -> i*n2 + k, b(i,k) -> n1*n2 + i*n2 + k.
class ProductLabeling {
 public:
  ProductLabeling(std::size_t n1, std::size_t n2) : n1_(n1), n2_(n2) {}

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  std::size_t size() const noexcept { return 2 * n1_ * n2_; }

  std::size_t index(Block block, std::size_t i, std::size_t k) const;
  ProductLabel label(std::size_t index) const;

 private:
  std::size_t n1_;
  std::size_t n2_;
};

struct ProductGraph {
  Graph graph;
  ProductLabeling labeling;
  Graph first;
  Graph second;
};

// n2^2 (n1 + e1) + n1 e2.
std::size_t product_edge_count(const Graph& first, const Graph& second);

// The three edge families: a(i,k)~a(j,l) for every edge ij of the first
// factor, b(r,i)~b(r,j) for every edge ij of the second, and a(i,p)~b(i,q).
// Defined for any factors; regularity is not required.
ProductGraph product(const Graph& first, const Graph& second);

// One copy of `second` per vertex of `first`, each vertex joined to all of its
// copy. Vertices of `first` come first, then copy i at n1 + i*n2 + k.
Graph corona(const Graph& first, const Graph& second);

// [A1 (x) J, I (x) J; I (x) J, I (x) A2] in the product's canonical ordering.
ExactMatrix adjacency_blocks(const Graph& first, const Graph& second);

// Block distance matrix as the published closed form gives it, re-expressed
// i-outer/k-inner:
//   a-a: d1(i,j) + 2[i=j][k!=l]
//   a-b: d1(i,j) + 1
//   b-b: d2(k,l)[i=j] + (d1(i,j) + 2)[i!=j]
// Requires both factors connected (the b-b diagonal uses d2 verbatim).
ExactMatrix distance_blocks(const Graph& first, const Graph& second);

// Same as distance_blocks with the b-b diagonal block replaced by
// min(d2(k,l), 2), unreachable counted as 2. This is the true distance
// matrix; only the first factor must be connected.
ExactMatrix distance_blocks_corrected(const Graph& first, const Graph& second);

}  // namespace prodspec
