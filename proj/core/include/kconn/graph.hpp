#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace kconn {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 in compressed
// adjacency form. Every adjacency list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse. Self-loops and endpoints >= n throw
  // ValidationError.
  static Graph from_edges(std::size_t num_vertices, std::span<const Edge> edges);

  // Builds from explicit adjacency lists and runs validate().
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }
  std::size_t max_degree() const { return max_degree_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Throws ValidationError unless adjacency is symmetric, loop-free,
  // duplicate-free and sorted, and m matches the list lengths.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::size_t max_degree_ = 0;
};

struct ParseOptions {
  // Shift every label down by one; label 0 becomes a parse error.
  bool one_based = false;
};

// Edge-list text: blank lines, '#' comments, "u v" pairs, and an optional
// leading "p <n> <m>" header (a format word such as "edge" may precede n).
Graph parse_edge_list(std::istream& in, const ParseOptions& options = {});
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});

// Inverse of parse_edge_list: header line followed by one edge per line.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace kconn
