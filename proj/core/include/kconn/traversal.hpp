#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/kset.hpp"
#include "kconn/ordering.hpp"

namespace kconn {

// Operation counters for one enumeration run.
//
// nodes_processed counts full neighbourhood generations. The reverse-search
// engine charges a node when it first arrives there; re-deriving a parent
// while backtracking is charged to parent_calls instead. max_gap is the
// largest number of nodes processed between two consecutive outputs,
// including before the first and after the last.
struct EnumStats {
  std::uint64_t outputs = 0;
  std::uint64_t nodes_processed = 0;
  std::uint64_t max_gap = 0;
  std::uint64_t parent_calls = 0;
  std::uint64_t peak_tracked_sets = 0;
};

void print_stats(std::ostream& out, const EnumStats& stats);

// Receives each set once, synchronously, in original labels.
using OutputSink = std::function<void(const KSet&)>;

enum class Engine { dfs, bfs, oracle };

Engine parse_engine(std::string_view name);
std::string_view engine_name(Engine engine);

// Breadth-first traversal of the exchange supergraph from the initial node,
// with an ordered store of every set seen. Memory grows with the output.
// g must be connected, 1 <= k <= n.
EnumStats enumerate_bfs(const Graph& g, std::size_t k, const OutputSink& sink);
EnumStats enumerate_bfs(const Graph& g, const VertexOrder& order, std::size_t k,
                        const OutputSink& sink);

// Reverse search: depth-first over the tree defined by parent(), keeping only
// the current set, one candidate and a recomputed parent. Nodes at odd depth
// (root = 1) are emitted on arrival, nodes at even depth when the search
// leaves them, which bounds max_gap by 2. g must be connected, 1 <= k <= n.
EnumStats enumerate_reverse_search(const Graph& g, std::size_t k, const OutputSink& sink);
EnumStats enumerate_reverse_search(const Graph& g, const VertexOrder& order, std::size_t k,
                                   const OutputSink& sink);

struct DriverOptions {
  std::uint64_t max_subsets = 5'000'000;  // oracle engine only
};

// Runs engine on every component with at least k vertices, each with the
// DFS order rooted at its smallest vertex, and aggregates the counters.
// k > n yields no output. Throws ContractViolation for k < 1.
EnumStats enumerate_driver(const Graph& g, std::size_t k, Engine engine, const OutputSink& sink,
                           const DriverOptions& options = {});

// Path through the supergraph between two connected k-sets.
struct ConnectingStep {
  enum class Kind {
    approach,  // sets disjoint: move one vertex along a shortest path
    merge,     // sets overlap: grow the shared component around a fixed vertex
  };
  Kind kind;
  std::size_t measure_before;  // distance for approach, component size for merge
  std::size_t measure_after;
};

struct ConnectingSequence {
  std::vector<KSet> sets;  // first is x, last is y
  std::vector<ConnectingStep> steps;
};

struct ConnectingOptions {
  // Merge steps remove a leaf of a spanning tree of the contracted set, as
  // in the textbook argument. Off, they may remove any vertex of X outside
  // the shared component that keeps the exchange connected, preferring one
  // outside y; that variant takes at most max(n-k, k-1) steps.
  bool leaf_removal_only = false;
};

// Builds x = X1, ..., Xl = y with consecutive sets one exchange apart. While
// the sets are disjoint, step along a shortest path between them, dropping a
// spanning-tree leaf away from the path. Once they share a vertex z (the
// smallest-rank shared vertex, kept fixed), repeatedly add the smallest-rank
// vertex of y adjacent to the component of z in G[X & y] and drop a vertex of
// X outside that component. g must be connected.
ConnectingSequence connecting_sequence(const Graph& g, const VertexOrder& order, const KSet& x,
                                       const KSet& y, ConnectingOptions options = {});

}  // namespace kconn
