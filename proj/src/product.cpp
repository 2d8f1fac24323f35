#include "prodspec/product.hpp"

#include <algorithm>

#include "prodspec/errors.hpp"

namespace prodspec {

std::size_t ProductLabeling::index(Block block, std::size_t i, std::size_t k) const {
  if (i >= n1_ || k >= n2_) fail(ErrorKind::Precondition, "product label out of range");
  std::size_t base = block == Block::A ? 0 : n1_ * n2_;
  return base + i * n2_ + k;
}

ProductLabel ProductLabeling::label(std::size_t index) const {
  if (index >= size()) fail(ErrorKind::Precondition, "product index out of range");
  Block block = index < n1_ * n2_ ? Block::A : Block::B;
  std::size_t local = index % (n1_ * n2_);
  return {block, local / n2_, local % n2_};
}

std::size_t product_edge_count(const Graph& first, const Graph& second) {
  std::size_t n1 = first.order();
  std::size_t n2 = second.order();
  return n2 * n2 * (n1 + first.size()) + n1 * second.size();
}

ProductGraph product(const Graph& first, const Graph& second) {
  const std::size_t n1 = first.order();
  const std::size_t n2 = second.order();
  if (n1 == 0 || n2 == 0) fail(ErrorKind::Precondition, "product factors need at least one vertex");
  ProductLabeling labeling(n1, n2);
  std::vector<Graph::Edge> edges;
  edges.reserve(product_edge_count(first, second));

  for (const auto& [i, j] : first.edges())
    for (std::size_t k = 0; k < n2; ++k)
      for (std::size_t l = 0; l < n2; ++l)
        edges.emplace_back(labeling.index(Block::A, i, k), labeling.index(Block::A, j, l));

  for (std::size_t r = 0; r < n1; ++r)
    for (const auto& [p, q] : second.edges())
      edges.emplace_back(labeling.index(Block::B, r, p), labeling.index(Block::B, r, q));

  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t p = 0; p < n2; ++p)
      for (std::size_t q = 0; q < n2; ++q)
        edges.emplace_back(labeling.index(Block::A, i, p), labeling.index(Block::B, i, q));

  return ProductGraph{Graph(labeling.size(), std::move(edges)), labeling, first, second};
}

Graph corona(const Graph& first, const Graph& second) {
  const std::size_t n1 = first.order();
  const std::size_t n2 = second.order();
  std::vector<Graph::Edge> edges(first.edges());
  for (std::size_t i = 0; i < n1; ++i) {
    std::size_t base = n1 + i * n2;
    for (const auto& [p, q] : second.edges()) edges.emplace_back(base + p, base + q);
    for (std::size_t k = 0; k < n2; ++k) edges.emplace_back(i, base + k);
  }
  return Graph(n1 * (1 + n2), std::move(edges));
}

ExactMatrix adjacency_blocks(const Graph& first, const Graph& second) {
  const auto i1 = ExactMatrix::identity(first.order());
  const auto j2 = ExactMatrix::ones(second.order(), second.order());
  const auto link = kronecker(i1, j2);
  return block_matrix(kronecker(adjacency_matrix(first), j2), link, link, kronecker(i1, adjacency_matrix(second)));
}

namespace {

// `d2(k, l)` supplies the within-copy b-b distance.
template <typename SameCopyDistance>
ExactMatrix assemble_distance(const Graph& first, const Graph& second, SameCopyDistance d2) {
  const ExactMatrix d1 = distance_matrix(first);
  const std::size_t n1 = first.order();
  const std::size_t n2 = second.order();
  ProductLabeling lab(n1, n2);
  ExactMatrix d(lab.size(), lab.size());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t l = 0; l < n2; ++l) {
          BigInt aa = d1(i, j) + ((i == j && k != l) ? 2 : 0);
          BigInt ab = d1(i, j) + 1;
          BigInt bb = i == j ? d2(k, l) : BigInt(d1(i, j) + 2);
          d(lab.index(Block::A, i, k), lab.index(Block::A, j, l)) = aa;
          d(lab.index(Block::A, i, k), lab.index(Block::B, j, l)) = ab;
          d(lab.index(Block::B, j, l), lab.index(Block::A, i, k)) = ab;
          d(lab.index(Block::B, i, k), lab.index(Block::B, j, l)) = bb;
        }
  return d;
}

}  // namespace

ExactMatrix distance_blocks(const Graph& first, const Graph& second) {
  if (!is_connected(first)) fail(ErrorKind::Disconnected, "distance blocks need a connected first factor");
  const ExactMatrix d2 = distance_matrix(second);
  return assemble_distance(first, second, [&](std::size_t k, std::size_t l) { return d2(k, l); });
}

ExactMatrix distance_blocks_corrected(const Graph& first, const Graph& second) {
  if (!is_connected(first)) fail(ErrorKind::Disconnected, "distance blocks need a connected first factor");
  std::vector<std::vector<std::optional<std::size_t>>> bfs;
  for (Graph::Vertex v = 0; v < second.order(); ++v) bfs.push_back(bfs_distances(second, v));
  return assemble_distance(first, second, [&](std::size_t k, std::size_t l) {
    const auto& d = bfs[k][l];
    return BigInt(static_cast<unsigned long>(d ? std::min<std::size_t>(*d, 2) : 2));
  });
}

}  // namespace prodspec
