#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

using Rank = std::uint32_t;
inline constexpr Rank kUnranked = std::numeric_limits<Rank>::max();

// A bijection between a subset of the vertices and positions 0..size()-1.
// The order it induces on vertices fixes the lexicographic order on vertex
// sets. dfs_ordering() produces the canonical instance; from_sequence()
// accepts any sequence so that non-DFS orders can be studied too.
class VertexOrder {
 public:
  VertexOrder() = default;

  // Throws ContractViolation on repeated or out-of-range vertices.
  static VertexOrder from_sequence(std::size_t num_vertices, std::vector<Vertex> sequence);

  std::size_t size() const { return vertex_at_.size(); }
  std::size_t num_vertices() const { return rank_.size(); }
  Vertex root() const { return vertex_at_.front(); }

  Rank rank(Vertex v) const { return rank_[v]; }
  bool contains(Vertex v) const { return v < rank_.size() && rank_[v] != kUnranked; }
  Vertex vertex_at(Rank r) const { return vertex_at_[r]; }
  std::span<const Vertex> sequence() const { return vertex_at_; }

  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

 private:
  std::vector<Rank> rank_;
  std::vector<Vertex> vertex_at_;
};

// Preorder of the depth-first traversal from root, visiting neighbours in
// ascending label order. Covers exactly root's component.
VertexOrder dfs_ordering(const Graph& g, Vertex root);

// All vertices ranked by their own label.
VertexOrder label_ordering(const Graph& g);

// True iff order.sequence() is the preorder of some depth-first traversal of
// the component of order.root() (any tie-break).
bool is_dfs_preorder(const Graph& g, const VertexOrder& order);

}  // namespace kconn
