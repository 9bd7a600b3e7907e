#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kconn/disjoint_set.hpp"
#include "kconn/graph.hpp"
#include "kconn/kset.hpp"
#include "kconn/ordering.hpp"

namespace kconn {

// The ranked vertices of a graph relabelled by rank, so that the natural
// order on ids is the vertex order and sorted rank vectors are LexKeys.
class RankedGraph {
 public:
  RankedGraph(const Graph& g, VertexOrder order);

  std::size_t size() const { return offsets_.size() - 1; }
  std::size_t max_degree() const { return max_degree_; }
  std::span<const Rank> neighbors(Rank r) const {
    return {targets_.data() + offsets_[r], targets_.data() + offsets_[r + 1]};
  }
  const VertexOrder& order() const { return order_; }

 private:
  VertexOrder order_;
  std::vector<std::size_t> offsets_;
  std::vector<Rank> targets_;
  std::size_t max_degree_ = 0;
};

// X' = X + added - removed, both in rank space.
struct Exchange {
  Rank added = 0;
  Rank removed = 0;
  friend bool operator==(const Exchange&, const Exchange&) = default;
};

// Canonical position in a neighbour stream: boundary vertices by ascending
// rank, and for each of them members by descending rank.
struct ScanCursor {
  std::size_t boundary_index = 0;
  std::size_t member_offset = 0;  // 0 is the largest member
};

struct ScanOptions {
  // Skip the union-find when the removed vertex is not a cut vertex of G[X].
  // Never changes results; off means one union-find per candidate.
  bool cut_vertex_prefilter = true;
};

// Enumerates the exchange neighbourhood of one connected set at a time.
// Holds O(n) scratch, so a scanner is reused across many sets.
class ExchangeScanner {
 public:
  explicit ExchangeScanner(const RankedGraph& g, ScanOptions options = {});

  // members: sorted ranks of a set whose induced subgraph is connected.
  void load(std::span<const Rank> members);

  std::span<const Rank> members() const { return members_; }
  // Vertices outside X adjacent to X, ascending.
  std::span<const Rank> boundary() const { return boundary_; }

  // Whether G[X + e.added - e.removed] is connected. e.added must lie on
  // the boundary and e.removed in X.
  bool connected_after(Exchange e);

  // Next valid exchange at or after the cursor; the cursor moves past it.
  std::optional<Exchange> next(ScanCursor& cursor);
  // Same stream restricted to exchanges with added > removed, the only ones
  // leading to lexicographically larger sets.
  std::optional<Exchange> next_larger(ScanCursor& cursor);
  // The cursor just past e in the canonical stream.
  ScanCursor cursor_after(Exchange e) const;

  // First valid exchange with added < removed, scanning added ascending then
  // removed descending. This is the parent of X.
  std::optional<Exchange> first_smaller();
  // Equivalent to first_smaller() == target for a target known to be valid,
  // stopping as soon as the answer is known.
  bool first_smaller_is(Exchange target);

  std::uint64_t connectivity_checks() const { return checks_; }

 private:
  void compute_cut_vertices();
  std::size_t member_at(std::size_t offset) const { return members_.size() - 1 - offset; }

  const RankedGraph* graph_;
  ScanOptions options_;
  std::vector<Rank> members_;
  std::vector<Rank> boundary_;
  std::vector<std::uint8_t> is_cut_;
  bool cuts_ready_ = false;
  // Rank -> index in members_ (kNoSlot otherwise) and rank -> boundary index.
  std::vector<std::uint32_t> member_slot_;
  std::vector<std::uint32_t> boundary_slot_;
  std::vector<std::uint32_t> degree_into_;  // by rank, boundary vertices only
  std::vector<Rank> anchor_of_;             // by rank, boundary vertices only
  DisjointSet dsu_;
  std::uint64_t checks_ = 0;

  // Tarjan scratch
  std::vector<std::int32_t> disc_, low_, tree_parent_;
  std::vector<std::pair<std::uint32_t, std::size_t>> dfs_stack_;
};

// Sorted copy of members with e applied.
LexKey apply_exchange(std::span<const Rank> members, Exchange e);
// Same, writing into out (which must not alias members).
void apply_exchange(std::span<const Rank> members, Exchange e, LexKey& out);

// Inverse direction: given X and a neighbour Y, the exchange taking X to Y.
Exchange exchange_between(std::span<const Rank> x, std::span<const Rank> y);

// The first k vertices of order, i.e. the smallest set of the family when
// order is a DFS preorder. Throws ContractViolation unless 1 <= k <= order.size().
KSet initial_node(const Graph& g, const VertexOrder& order, std::size_t k);

// All connected sets reachable from x by one exchange, in canonical stream
// order. For |x| = 1 these are the singletons adjacent to x. Throws
// ContractViolation when x is disconnected or contains unranked vertices.
std::vector<KSet> neighbors(const Graph& g, const VertexOrder& order, const KSet& x,
                            ScanOptions options = {});

// The first exchange with added < removed that keeps the set connected,
// added ascending then removed descending. Throws ContractViolation when
// x == x0, InternalInvariantViolation if no such exchange exists.
KSet parent(const Graph& g, const VertexOrder& order, const KSet& x, const KSet& x0);

}  // namespace kconn
