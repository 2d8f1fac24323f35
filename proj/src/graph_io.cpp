#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "prodspec/errors.hpp"
#include "prodspec/graph.hpp"

namespace prodspec {
namespace {

std::size_t parse_count(std::string_view token, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::Parse, "malformed " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Graph::Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!order) {
      if (tokens.size() != 1) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected vertex count");
      order = parse_count(tokens[0], "vertex count");
      continue;
    }
    if (tokens.size() != 2) fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(parse_count(tokens[0], "vertex"), parse_count(tokens[1], "vertex"));
  }
  if (!order) fail(ErrorKind::Parse, "edge list is empty");
  return Graph(*order, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  for (char ch : text) {
    auto byte = static_cast<unsigned char>(ch);
    if (byte < 63 || byte > 126) fail(ErrorKind::Parse, "graph6: byte outside 63..126");
  }
  if (text.empty()) fail(ErrorKind::Parse, "graph6: empty input");

  auto value = [](char ch) { return static_cast<std::size_t>(static_cast<unsigned char>(ch) - 63); };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = value(text[0]);
    pos = 1;
  } else {
    std::size_t width = (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) ? 6 : 3;
    std::size_t start = width == 6 ? 2 : 1;
    if (text.size() < start + width) fail(ErrorKind::Parse, "graph6: truncated size field");
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | value(text[start + i]);
    pos = start + width;
  }

  std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) fail(ErrorKind::Parse, "graph6: truncated bit field");
  if (text.size() - pos > bytes) fail(ErrorKind::Parse, "graph6: trailing bytes after bit field");

  std::vector<Graph::Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      auto chunk = value(text[pos + bit / 6]);
      if ((chunk >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  std::size_t n = g.order();
  auto push6 = [&](std::size_t v) { out.push_back(static_cast<char>(63 + (v & 63U))); };
  if (n <= 62) {
    push6(n);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) push6(n >> shift);
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) push6(n >> shift);
  }
  std::size_t chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        push6(chunk);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) push6(chunk << (6 - filled));
  return out;
}

Graph parse_graph_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) fail(ErrorKind::Parse, "empty graph specification");

  if (spec.front() == '@') {
    std::string path(spec.substr(1));
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    auto body = trim(content);
    // graph6 bytes are all >= 63, so a digit anywhere means an edge list.
    bool graph6 = body.starts_with(kGraph6Header) ||
                  (!body.empty() && body.find_first_of("0123456789#\n \t") == std::string_view::npos);
    return graph6 ? from_graph6(body) : from_edge_list(content);
  }

  std::string lower;
  for (char ch : spec) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "petersen") return family("petersen", {});

  auto numbers = [&](std::string_view rest) {
    std::vector<long> out;
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      auto token = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      out.push_back(static_cast<long>(parse_count(token, "family parameter")));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };

  char head = static_cast<char>(std::toupper(static_cast<unsigned char>(spec.front())));
  auto params = numbers(spec.substr(1));
  // A bad parameter in a spec string is bad input, not a caller bug.
  auto build = [&](std::string_view name, std::span<const long> ps) {
    try {
      return family(name, ps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Precondition) throw;
      fail(ErrorKind::Parse, std::string(spec) + ": " + e.what());
    }
  };
  switch (head) {
    case 'K':
      if (params.size() == 2) return build("complete_bipartite", params);
      if (params.size() == 1) return build("complete", params);
      break;
    case 'C':
      if (params.size() == 1) return build("cycle", params);
      break;
    case 'P':
      if (params.size() == 1) return build("path", params);
      break;
    case 'S':
      if (params.size() == 1) return build("star", params);
      break;
    case 'Q':
      if (params.size() == 1) return build("hypercube", params);
      break;
    default:
      break;
  }
  fail(ErrorKind::Parse, "unrecognized graph specification '" + std::string(spec) + "'");
}

}  // namespace prodspec
