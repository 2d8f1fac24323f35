#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prodspec/matrix.hpp"

namespace prodspec {

// Simple undirected graph on vertices 0..n-1. Edges are stored as sorted
// pairs (u < v) in lexicographic order, so two graphs with the same edge set
// compare equal. Immutable once constructed.
class Graph {
 public:
  using Vertex = std::size_t;
  using Edge = std::pair<Vertex, Vertex>;

  Graph() = default;

  // Throws Error(Parse) on out-of-range endpoints, self-loops or duplicates.
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Image of this graph under the vertex map v -> perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> regularity;
};

DegreeProfile degree_profile(const Graph& g);

// Regularity of g, or Error(Precondition) naming `what` when irregular.
std::size_t require_regular(const Graph& g, std::string_view what);

bool is_connected(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Graph::Vertex>> components(const Graph& g);

// BFS distances from `source`; unreachable vertices get std::nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Graph::Vertex source);

ExactMatrix adjacency_matrix(const Graph& g);
ExactMatrix degree_matrix(const Graph& g);
ExactMatrix laplacian_matrix(const Graph& g);
ExactMatrix signless_laplacian_matrix(const Graph& g);

// All-pairs shortest path lengths; Error(Disconnected) if g is disconnected.
ExactMatrix distance_matrix(const Graph& g);

// Largest finite distance; Error(Disconnected) if g is disconnected.
std::size_t diameter(const Graph& g);

// ---------------------------------------------------------------------------
// Text formats

// First token n, then one "u v" pair per line. '#' starts a comment.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Standard graph6 (optionally preceded by the ">>graph6<<" header).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Generators: complete, cycle, path, star, complete_bipartite, petersen,
// hypercube. Throws Error(Precondition) for unknown names or bad params.
Graph family(std::string_view name, std::span<const long> params);

// Short family names used on the command line: K<n>, C<n>, P<n>, S<n>,
// K<a>,<b>, Q<d>, petersen. A leading '@' reads a file, auto-detecting graph6
// versus edge-list content.
Graph parse_graph_spec(std::string_view spec);

}  // namespace prodspec
