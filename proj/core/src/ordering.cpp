#include "kconn/ordering.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "kconn/errors.hpp"

namespace kconn {

VertexOrder VertexOrder::from_sequence(std::size_t num_vertices, std::vector<Vertex> sequence) {
  if (sequence.empty()) throw ContractViolation("vertex order must be nonempty");
  VertexOrder order;
  order.rank_.assign(num_vertices, kUnranked);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Vertex v = sequence[i];
    if (v >= num_vertices) throw ContractViolation("vertex " + std::to_string(v) + " out of range");
    if (order.rank_[v] != kUnranked) {
      throw ContractViolation("vertex " + std::to_string(v) + " repeated in order");
    }
    order.rank_[v] = static_cast<Rank>(i);
  }
  order.vertex_at_ = std::move(sequence);
  return order;
}

VertexOrder dfs_ordering(const Graph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw ContractViolation("DFS root " + std::to_string(root) + " out of range");

  std::vector<bool> seen(n, false);
  std::vector<Vertex> preorder;
  // (vertex, index of the next neighbour to try)
  std::vector<std::pair<Vertex, std::size_t>> stack;
  seen[root] = true;
  preorder.push_back(root);
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto adj = g.neighbors(v);
    while (next < adj.size() && seen[adj[next]]) ++next;
    if (next == adj.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex u = adj[next++];
    seen[u] = true;
    preorder.push_back(u);
    stack.emplace_back(u, 0);
  }
  return VertexOrder::from_sequence(n, std::move(preorder));
}

VertexOrder label_ordering(const Graph& g) {
  std::vector<Vertex> sequence(g.num_vertices());
  std::iota(sequence.begin(), sequence.end(), Vertex{0});
  return VertexOrder::from_sequence(g.num_vertices(), std::move(sequence));
}

bool is_dfs_preorder(const Graph& g, const VertexOrder& order) {
  if (order.num_vertices() != g.num_vertices()) return false;
  std::vector<bool> seen(g.num_vertices(), false);
  auto exhausted = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) return false;
    }
    return true;
  };
  std::vector<Vertex> stack;
  for (Vertex v : order.sequence()) {
    if (!stack.empty()) {
      // The next preorder vertex must hang off the deepest vertex that still
      // has unvisited neighbours.
      while (!stack.empty() && exhausted(stack.back())) stack.pop_back();
      if (stack.empty() || !g.has_edge(stack.back(), v)) return false;
    }
    seen[v] = true;
    stack.push_back(v);
  }
  // Nothing reachable may be left out.
  for (Vertex v : order.sequence()) {
    if (!exhausted(v)) return false;
  }
  return true;
}

}  // namespace kconn
