#include "kconn/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "kconn/errors.hpp"

namespace kconn {

Graph Graph::from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adjacency(num_vertices);
  for (const auto& [u, v] : edges) {
    if (u == v) {
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    }
    if (u >= num_vertices || v >= num_vertices) {
      throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} exceeds vertex count " + std::to_string(num_vertices));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return from_adjacency(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  g.offsets_.reserve(adjacency.size() + 1);
  g.offsets_.push_back(0);
  for (const auto& list : adjacency) {
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
    g.max_degree_ = std::max(g.max_degree_, list.size());
  }
  if (g.targets_.size() % 2 != 0) {
    throw ValidationError("adjacency lists have odd total length");
  }
  g.validate();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::validate() const {
  const std::size_t n = num_vertices();
  std::size_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto list = neighbors(v);
    total += list.size();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex u = list[i];
      if (u >= n) throw ValidationError("neighbor label out of range");
      if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && list[i - 1] >= u) {
        throw ValidationError("adjacency of vertex " + std::to_string(v) +
                              " is unsorted or has duplicates");
      }
      if (!has_edge(u, v)) {
        throw ValidationError("asymmetric adjacency between " + std::to_string(v) + " and " +
                              std::to_string(u));
      }
    }
  }
  if (total != 2 * num_edges()) throw ValidationError("edge count mismatch");
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

Vertex to_label(std::uint64_t raw, const ParseOptions& options, std::size_t line_no) {
  if (options.one_based) {
    if (raw == 0) throw ParseError(line_no, "label 0 in one-based input");
    --raw;
  }
  if (raw >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(line_no, "vertex label too large");
  }
  return static_cast<Vertex>(raw);
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::size_t max_label_plus_one = 0;
  bool seen_content = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "p") {
      if (seen_content) throw ParseError(line_no, "header must precede edges");
      // "p <n> <m>" or "p <format> <n> <m>"
      std::size_t first = 1;
      if (tokens.size() == 4) first = 2;
      if (tokens.size() != first + 2) throw ParseError(line_no, "header must be 'p <n> <m>'");
      declared_n = parse_number(tokens[first], line_no);
      parse_number(tokens[first + 1], line_no);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    const Vertex u = to_label(parse_number(tokens[0], line_no), options, line_no);
    const Vertex v = to_label(parse_number(tokens[1], line_no), options, line_no);
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                            std::to_string(u));
    }
    if (declared_n && (u >= *declared_n || v >= *declared_n)) {
      throw ValidationError("line " + std::to_string(line_no) + ": endpoint exceeds declared " +
                            "vertex count " + std::to_string(*declared_n));
    }
    max_label_plus_one = std::max<std::size_t>(max_label_plus_one, std::max(u, v) + 1);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(declared_n.value_or(max_label_plus_one), edges);
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace kconn
