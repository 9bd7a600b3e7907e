#include "kconn/connectivity.hpp"

#include <algorithm>
#include <string>

#include "kconn/disjoint_set.hpp"
#include "kconn/errors.hpp"

namespace kconn {

namespace {

std::vector<Vertex> sorted_subset(const Graph& g, std::span<const Vertex> s, const char* what) {
  std::vector<Vertex> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ContractViolation(std::string(what) + ": repeated vertex");
  }
  if (!out.empty() && out.back() >= g.num_vertices()) {
    throw ContractViolation(std::string(what) + ": vertex out of range");
  }
  return out;
}

std::ptrdiff_t index_in(const std::vector<Vertex>& sorted, Vertex v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return -1;
  return it - sorted.begin();
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& component = components.emplace_back();
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
  }
  return components;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const auto members = sorted_subset(g, vertices, "induced_subgraph");
  std::vector<std::vector<Vertex>> adjacency(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex u : g.neighbors(members[i])) {
      const auto j = index_in(members, u);
      if (j >= 0) adjacency[i].push_back(static_cast<Vertex>(j));
    }
  }
  return Graph::from_adjacency(std::move(adjacency));
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw ContractViolation("is_connected_subset: empty set");
  const auto members = sorted_subset(g, s, "is_connected_subset");
  DisjointSet dsu(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Vertex u : g.neighbors(members[i])) {
      if (u <= members[i]) continue;
      const auto j = index_in(members, u);
      if (j >= 0) dsu.unite(i, static_cast<std::size_t>(j));
    }
  }
  return dsu.component_count() == 1;
}

Vertex spanning_tree_leaf(const Graph& g, std::span<const Vertex> s, Vertex exclude) {
  const auto members = sorted_subset(g, s, "spanning_tree_leaf");
  if (index_in(members, exclude) < 0) {
    throw ContractViolation("spanning_tree_leaf: excluded vertex not in set");
  }
  if (members.size() < 2) {
    throw ContractViolation("spanning_tree_leaf: a single vertex has no leaf besides the root");
  }
  std::vector<bool> seen(members.size(), false);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  std::size_t visited = 1;
  Vertex last = exclude;
  seen[static_cast<std::size_t>(index_in(members, exclude))] = true;
  stack.emplace_back(exclude, 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto adj = g.neighbors(v);
    bool descended = false;
    while (next < adj.size()) {
      const Vertex u = adj[next++];
      const auto j = index_in(members, u);
      if (j < 0 || seen[static_cast<std::size_t>(j)]) continue;
      seen[static_cast<std::size_t>(j)] = true;
      ++visited;
      last = u;
      stack.emplace_back(u, 0);
      descended = true;
      break;
    }
    if (!descended) stack.pop_back();
  }
  if (visited != members.size()) {
    throw ContractViolation("spanning_tree_leaf: induced subgraph is not connected");
  }
  return last;
}

std::vector<Vertex> shortest_path_between_sets(const Graph& g, std::span<const Vertex> a,
                                               std::span<const Vertex> b) {
  if (a.empty() || b.empty()) throw ContractViolation("shortest_path_between_sets: empty set");
  const auto sources = sorted_subset(g, a, "shortest_path_between_sets");
  const auto targets = sorted_subset(g, b, "shortest_path_between_sets");
  for (Vertex v : sources) {
    if (index_in(targets, v) >= 0) {
      throw ContractViolation("shortest_path_between_sets: sets overlap");
    }
  }

  constexpr Vertex kNone = static_cast<Vertex>(-1);
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> predecessor(n, kNone);
  std::vector<bool> reached(n, false);
  std::vector<Vertex> level = sources;
  for (Vertex v : level) reached[v] = true;

  Vertex end = kNone;
  while (!level.empty() && end == kNone) {
    std::vector<Vertex> next_level;
    for (Vertex v : level) {
      for (Vertex u : g.neighbors(v)) {
        if (reached[u]) continue;
        reached[u] = true;
        predecessor[u] = v;
        next_level.push_back(u);
      }
    }
    std::sort(next_level.begin(), next_level.end());
    for (Vertex u : next_level) {
      if (index_in(targets, u) >= 0) {
        end = u;
        break;
      }
    }
    level = std::move(next_level);
  }
  if (end == kNone) throw ContractViolation("shortest_path_between_sets: sets are disconnected");

  std::vector<Vertex> path{end};
  while (predecessor[path.back()] != kNone) path.push_back(predecessor[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace kconn
