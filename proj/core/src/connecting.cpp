#include <algorithm>
#include <iterator>
#include <optional>
#include <string>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"
#include "kconn/traversal.hpp"

namespace kconn {

namespace {

using VertexList = std::vector<Vertex>;  // sorted by label

bool contains(const VertexList& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexList exchanged(const VertexList& s, Vertex added, Vertex removed) {
  VertexList out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v != removed) out.push_back(v);
  }
  out.insert(std::upper_bound(out.begin(), out.end(), added), added);
  return out;
}

VertexList intersect(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Component of z in the subgraph induced on `within`.
VertexList component_of(const Graph& g, const VertexList& within, Vertex z) {
  VertexList found{z};
  VertexList stack{z};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (contains(within, u) && std::find(found.begin(), found.end(), u) == found.end()) {
        found.push_back(u);
        stack.push_back(u);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::size_t set_distance(const Graph& g, const VertexList& a, const VertexList& b) {
  if (!intersect(a, b).empty()) return 0;
  return shortest_path_between_sets(g, a, b).size() - 1;
}

// Last preorder vertex of a DFS over x - core with core contracted to the root.
Vertex contracted_tree_leaf(const Graph& g, const VertexList& x, const VertexList& core) {
  VertexList rest;
  std::set_difference(x.begin(), x.end(), core.begin(), core.end(), std::back_inserter(rest));
  VertexList root_adj;
  for (Vertex c : core) {
    for (Vertex u : g.neighbors(c)) {
      if (contains(rest, u)) root_adj.push_back(u);
    }
  }
  std::sort(root_adj.begin(), root_adj.end());
  root_adj.erase(std::unique(root_adj.begin(), root_adj.end()), root_adj.end());

  std::vector<bool> seen(rest.size(), false);
  auto slot = [&](Vertex v) { return std::lower_bound(rest.begin(), rest.end(), v) - rest.begin(); };
  std::optional<Vertex> last;
  // Stack frames over explicit neighbour lists; the root uses root_adj.
  std::vector<std::pair<VertexList, std::size_t>> stack;
  stack.emplace_back(root_adj, 0);
  while (!stack.empty()) {
    auto& [adj, next] = stack.back();
    bool descended = false;
    while (next < adj.size()) {
      const Vertex u = adj[next++];
      if (!contains(rest, u) || seen[slot(u)]) continue;
      seen[slot(u)] = true;
      last = u;
      auto nb = g.neighbors(u);
      stack.emplace_back(VertexList(nb.begin(), nb.end()), 0);
      descended = true;
      break;
    }
    if (!descended) stack.pop_back();
  }
  if (!last) throw InternalInvariantViolation("contracted set has no leaf besides the root");
  return *last;
}

}  // namespace

ConnectingSequence connecting_sequence(const Graph& g, const VertexOrder& order, const KSet& x,
                                       const KSet& y, ConnectingOptions options) {
  if (x.size() != y.size() || x.size() == 0) {
    throw ContractViolation("connecting_sequence: sets must be nonempty and of equal size");
  }
  for (const KSet* s : {&x, &y}) {
    for (Vertex v : s->members) {
      if (!order.contains(v)) throw ContractViolation("connecting_sequence: unranked vertex");
    }
    if (!is_connected_subset(g, s->members)) {
      throw ContractViolation("connecting_sequence: set is not connected");
    }
  }
  const std::size_t k = x.size();
  const auto by_rank = [&](Vertex a, Vertex b) { return order.rank(a) < order.rank(b); };

  VertexList current = sorted_labels(x);
  const VertexList target = sorted_labels(y);
  ConnectingSequence seq;
  seq.sets.push_back(make_kset(order, current));
  std::optional<Vertex> anchor;  // the fixed shared vertex z of merge steps

  // Each step shrinks the distance or grows the anchored component.
  const std::size_t step_limit = g.num_vertices() + 2 * k;
  while (current != target) {
    if (seq.steps.size() > step_limit) {
      throw InternalInvariantViolation("connecting_sequence made no progress");
    }
    const VertexList shared = intersect(current, target);
    VertexList next;
    if (shared.empty()) {
      const auto path = shortest_path_between_sets(g, current, target);
      const Vertex removed = k == 1 ? current.front() : spanning_tree_leaf(g, current, path.front());
      next = exchanged(current, path[1], removed);
      seq.steps.push_back({ConnectingStep::Kind::approach, path.size() - 1,
                           set_distance(g, next, target)});
    } else {
      if (!anchor) anchor = *std::min_element(shared.begin(), shared.end(), by_rank);
      const VertexList core = component_of(g, shared, *anchor);

      VertexList incoming;
      for (Vertex u : target) {
        if (contains(core, u)) continue;
        for (Vertex c : core) {
          if (g.has_edge(u, c)) {
            incoming.push_back(u);
            break;
          }
        }
      }
      std::sort(incoming.begin(), incoming.end(), by_rank);
      if (incoming.empty()) throw InternalInvariantViolation("target set is not connected");

      std::optional<std::pair<Vertex, Vertex>> choice;
      if (options.leaf_removal_only) {
        choice.emplace(incoming.front(), contracted_tree_leaf(g, current, core));
      } else {
        VertexList outgoing;
        std::set_difference(current.begin(), current.end(), core.begin(), core.end(),
                            std::back_inserter(outgoing));
        std::sort(outgoing.begin(), outgoing.end(), [&](Vertex a, Vertex b) { return by_rank(b, a); });
        // Prefer dropping a vertex the target does not need.
        for (bool outside_target : {true, false}) {
          for (Vertex u : incoming) {
            for (Vertex v : outgoing) {
              if (contains(target, v) == outside_target) continue;
              if (is_connected_subset(g, exchanged(current, u, v))) {
                choice.emplace(u, v);
                break;
              }
            }
            if (choice) break;
          }
          if (choice) break;
        }
      }
      if (!choice) throw InternalInvariantViolation("no exchange grows the shared component");
      next = exchanged(current, choice->first, choice->second);
      seq.steps.push_back({ConnectingStep::Kind::merge, core.size(),
                           component_of(g, intersect(next, target), *anchor).size()});
    }
    current = std::move(next);
    seq.sets.push_back(make_kset(order, current));
  }
  return seq;
}

}  // namespace kconn
