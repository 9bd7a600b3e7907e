#pragma once

#include <span>
#include <vector>

#include "kconn/graph.hpp"

namespace kconn {

// Maximal connected vertex sets, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// The subgraph induced on `vertices` (sorted labels), relabelled so that
// vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// True iff the subgraph induced on s is connected. Runs a union-find over the
// edges of g with both endpoints in s, in O(|s| * maxdeg * log |s|).
// Throws ContractViolation for an empty s or out-of-range vertices.
bool is_connected_subset(const Graph& g, std::span<const Vertex> s);

// A vertex v of s, v != exclude, whose removal leaves g[s] connected: the last
// vertex in preorder of the DFS tree of g[s] rooted at exclude (ascending
// labels), which is always a leaf. Requires g[s] connected and |s| >= 2.
Vertex spanning_tree_leaf(const Graph& g, std::span<const Vertex> s, Vertex exclude);

// Shortest path u0..ur from a to b with u0 in a, ur in b, interior outside
// both. Multi-source BFS processed level by level in ascending label order;
// each vertex keeps its smallest-label predecessor, and the smallest-label
// vertex of b at minimum distance ends the path. a and b must be nonempty,
// disjoint and connected to each other.
std::vector<Vertex> shortest_path_between_sets(const Graph& g, std::span<const Vertex> a,
                                               std::span<const Vertex> b);

}  // namespace kconn
