#include <sstream>

#include "prodspec/errors.hpp"
#include "prodspec/graph.hpp"

namespace prodspec {
namespace {

std::size_t positive_param(std::span<const long> params, std::size_t index, std::string_view family_name,
                           long minimum) {
  if (params.size() <= index) fail(ErrorKind::Precondition, std::string(family_name) + ": missing parameter");
  long v = params[index];
  if (v < minimum) {
    std::ostringstream os;
    os << family_name << ": parameter " << v << " is below " << minimum;
    fail(ErrorKind::Precondition, os.str());
  }
  return static_cast<std::size_t>(v);
}

void expect_params(std::span<const long> params, std::size_t count, std::string_view family_name) {
  if (params.size() != count) {
    fail(ErrorKind::Precondition, std::string(family_name) + ": expected " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

Graph family(std::string_view name, std::span<const long> params) {
  std::vector<Graph::Edge> edges;
  if (name == "complete") {
    expect_params(params, 1, name);
    auto n = positive_param(params, 0, name, 1);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
  }
  if (name == "cycle") {
    expect_params(params, 1, name);
    auto n = positive_param(params, 0, name, 3);
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
  }
  if (name == "path") {
    expect_params(params, 1, name);
    auto n = positive_param(params, 0, name, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
  }
  if (name == "star") {
    // star(n): K_{1,n-1}, centre 0.
    expect_params(params, 1, name);
    auto n = positive_param(params, 0, name, 1);
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
  }
  if (name == "complete_bipartite") {
    expect_params(params, 2, name);
    auto a = positive_param(params, 0, name, 1);
    auto b = positive_param(params, 1, name, 1);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
  }
  if (name == "petersen") {
    expect_params(params, 0, name);
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, i + 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(edges));
  }
  if (name == "hypercube") {
    expect_params(params, 1, name);
    auto d = positive_param(params, 0, name, 0);
    if (d > 20) fail(ErrorKind::Precondition, "hypercube: dimension too large");
    std::size_t n = std::size_t{1} << d;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t bit = 0; bit < d; ++bit)
        if (auto w = v ^ (std::size_t{1} << bit); v < w) edges.emplace_back(v, w);
    return Graph(n, std::move(edges));
  }
  fail(ErrorKind::Precondition, "unknown graph family '" + std::string(name) + "'");
}

}  // namespace prodspec
