#include "prodspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "prodspec/errors.hpp"

namespace prodspec {

Graph::Graph(std::size_t order, std::vector<Edge> edges) : order_(order), adjacency_(order) {
  for (auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      std::ostringstream os;
      os << "edge {" << u << "," << v << "} has an endpoint outside [0," << order << ")";
      fail(ErrorKind::Parse, os.str());
    }
    if (u == v) fail(ErrorKind::Parse, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    std::ostringstream os;
    os << "duplicate edge {" << dup->first << "," << dup->second << "}";
    fail(ErrorKind::Parse, os.str());
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order_) fail(ErrorKind::Precondition, "permutation length does not match graph order");
  std::vector<bool> seen(order_, false);
  for (Vertex p : perm) {
    if (p >= order_ || seen[p]) fail(ErrorKind::Precondition, "not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const auto& [u, v] : edges_) mapped.emplace_back(perm[u], perm[v]);
  return Graph(order_, std::move(mapped));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  profile.degrees.reserve(g.order());
  for (Graph::Vertex v = 0; v < g.order(); ++v) profile.degrees.push_back(g.degree(v));
  if (!profile.degrees.empty() &&
      std::all_of(profile.degrees.begin(), profile.degrees.end(),
                  [&](std::size_t d) { return d == profile.degrees.front(); })) {
    profile.regularity = profile.degrees.front();
  }
  return profile;
}

std::size_t require_regular(const Graph& g, std::string_view what) {
  auto profile = degree_profile(g);
  if (!profile.regularity) fail(ErrorKind::Precondition, std::string(what) + " is not regular");
  return *profile.regularity;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Graph::Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Graph::Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Graph::Vertex>> components(const Graph& g) {
  std::vector<std::vector<Graph::Vertex>> parts;
  std::vector<bool> assigned(g.order(), false);
  for (Graph::Vertex s = 0; s < g.order(); ++s) {
    if (assigned[s]) continue;
    auto dist = bfs_distances(g, s);
    std::vector<Graph::Vertex> part;
    for (Graph::Vertex v = 0; v < g.order(); ++v) {
      if (dist[v]) {
        part.push_back(v);
        assigned[v] = true;
      }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

ExactMatrix adjacency_matrix(const Graph& g) {
  ExactMatrix a(g.order(), g.order());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

ExactMatrix degree_matrix(const Graph& g) {
  ExactMatrix d(g.order(), g.order());
  for (Graph::Vertex v = 0; v < g.order(); ++v) d(v, v) = static_cast<unsigned long>(g.degree(v));
  return d;
}

ExactMatrix laplacian_matrix(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

ExactMatrix signless_laplacian_matrix(const Graph& g) { return degree_matrix(g) + adjacency_matrix(g); }

ExactMatrix distance_matrix(const Graph& g) {
  ExactMatrix d(g.order(), g.order());
  for (Graph::Vertex s = 0; s < g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    for (Graph::Vertex t = 0; t < g.order(); ++t) {
      if (!dist[t]) fail(ErrorKind::Disconnected, "distance matrix of a disconnected graph");
      d(s, t) = static_cast<unsigned long>(*dist[t]);
    }
  }
  return d;
}

std::size_t diameter(const Graph& g) {
  std::size_t diam = 0;
  for (Graph::Vertex s = 0; s < g.order(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (!d) fail(ErrorKind::Disconnected, "diameter of a disconnected graph");
      diam = std::max(diam, *d);
    }
  }
  return diam;
}

}  // namespace prodspec
