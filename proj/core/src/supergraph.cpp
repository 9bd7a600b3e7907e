#include "kconn/supergraph.hpp"

#include <algorithm>
#include <string>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"

namespace kconn {

namespace {

constexpr std::uint32_t kNoSlot = static_cast<std::uint32_t>(-1);

// Rank vector of x after checking the neighbourhood preconditions.
LexKey checked_key(const Graph& g, const VertexOrder& order, const KSet& x) {
  if (x.members.empty()) throw ContractViolation("empty vertex set");
  auto key = lex_key(order, x);
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw ContractViolation("repeated vertex in set");
  }
  if (!is_connected_subset(g, x.members)) {
    throw ContractViolation("vertex set does not induce a connected subgraph");
  }
  return key;
}

}  // namespace

RankedGraph::RankedGraph(const Graph& g, VertexOrder order) : order_(std::move(order)) {
  if (order_.num_vertices() != g.num_vertices()) {
    throw ContractViolation("vertex order belongs to a different graph");
  }
  const std::size_t n = order_.size();
  offsets_.reserve(n + 1);
  offsets_.push_back(0);
  for (Rank r = 0; r < n; ++r) {
    const std::size_t before = targets_.size();
    for (Vertex u : g.neighbors(order_.vertex_at(r))) {
      if (!order_.contains(u)) {
        throw ContractViolation("vertex order must cover whole components");
      }
      targets_.push_back(order_.rank(u));
    }
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(before), targets_.end());
    offsets_.push_back(targets_.size());
    max_degree_ = std::max(max_degree_, targets_.size() - before);
  }
}

ExchangeScanner::ExchangeScanner(const RankedGraph& g, ScanOptions options)
    : graph_(&g),
      options_(options),
      member_slot_(g.size(), kNoSlot),
      boundary_slot_(g.size(), kNoSlot),
      degree_into_(g.size(), 0),
      anchor_of_(g.size(), 0) {
  members_.reserve(g.size());
  boundary_.reserve(g.size());
  is_cut_.reserve(g.size());
  disc_.reserve(g.size());
  low_.reserve(g.size());
  tree_parent_.reserve(g.size());
  dfs_stack_.reserve(g.size());
  dsu_.reset(g.size());
}

void ExchangeScanner::load(std::span<const Rank> members) {
  for (Rank r : members_) member_slot_[r] = kNoSlot;
  for (Rank r : boundary_) boundary_slot_[r] = kNoSlot;
  members_.assign(members.begin(), members.end());
  boundary_.clear();
  for (std::size_t i = 0; i < members_.size(); ++i) member_slot_[members_[i]] = static_cast<std::uint32_t>(i);

  for (Rank v : members_) {
    for (Rank u : graph_->neighbors(v)) {
      if (member_slot_[u] != kNoSlot) continue;
      if (boundary_slot_[u] == kNoSlot) {
        boundary_slot_[u] = 0;
        degree_into_[u] = 0;
        boundary_.push_back(u);
      }
      ++degree_into_[u];
      anchor_of_[u] = v;
    }
  }
  std::sort(boundary_.begin(), boundary_.end());
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    boundary_slot_[boundary_[i]] = static_cast<std::uint32_t>(i);
  }
  cuts_ready_ = false;
}

void ExchangeScanner::compute_cut_vertices() {
  const std::size_t k = members_.size();
  cuts_ready_ = true;
  is_cut_.assign(k, 0);
  if (k < 3) return;
  disc_.assign(k, -1);
  low_.assign(k, 0);
  tree_parent_.assign(k, -1);
  std::int32_t clock = 0;
  std::size_t root_children = 0;
  dfs_stack_.clear();
  disc_[0] = low_[0] = clock++;
  dfs_stack_.emplace_back(0, 0);
  while (!dfs_stack_.empty()) {
    auto& [v, next] = dfs_stack_.back();
    auto adj = graph_->neighbors(members_[v]);
    bool descended = false;
    while (next < adj.size()) {
      const std::uint32_t u = member_slot_[adj[next++]];
      if (u == kNoSlot) continue;
      if (disc_[u] < 0) {
        tree_parent_[u] = static_cast<std::int32_t>(v);
        disc_[u] = low_[u] = clock++;
        if (v == 0) ++root_children;
        dfs_stack_.emplace_back(u, 0);
        descended = true;
        break;
      }
      if (static_cast<std::int32_t>(u) != tree_parent_[v]) low_[v] = std::min(low_[v], disc_[u]);
    }
    if (descended) continue;
    const std::uint32_t child = v;
    dfs_stack_.pop_back();
    const std::int32_t p = tree_parent_[child];
    if (p < 0) continue;
    low_[p] = std::min(low_[p], low_[child]);
    if (p != 0 && low_[child] >= disc_[p]) is_cut_[p] = 1;
  }
  is_cut_[0] = root_children >= 2 ? 1 : 0;
}

bool ExchangeScanner::connected_after(Exchange e) {
  ++checks_;
  const std::size_t k = members_.size();
  if (k == 1) return true;
  // The incoming vertex needs an edge into X - removed.
  if (degree_into_[e.added] == 1 && anchor_of_[e.added] == e.removed) return false;
  const std::uint32_t gone = member_slot_[e.removed];
  if (options_.cut_vertex_prefilter) {
    if (!cuts_ready_) compute_cut_vertices();
    if (!is_cut_[gone]) return true;
  }

  // The incoming vertex takes over the removed vertex's slot.
  dsu_.reset(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i == gone) continue;
    for (Rank w : graph_->neighbors(members_[i])) {
      const std::uint32_t j = member_slot_[w];
      if (j != kNoSlot && j > i && j != gone) dsu_.unite(i, j);
    }
  }
  for (Rank w : graph_->neighbors(e.added)) {
    const std::uint32_t j = member_slot_[w];
    if (j != kNoSlot && j != gone) dsu_.unite(gone, j);
  }
  return dsu_.component_count() == 1;
}

std::optional<Exchange> ExchangeScanner::next(ScanCursor& cursor) {
  const std::size_t k = members_.size();
  while (cursor.boundary_index < boundary_.size()) {
    const Rank added = boundary_[cursor.boundary_index];
    while (cursor.member_offset < k) {
      const Exchange e{added, members_[member_at(cursor.member_offset)]};
      ++cursor.member_offset;
      if (connected_after(e)) return e;
    }
    ++cursor.boundary_index;
    cursor.member_offset = 0;
  }
  return std::nullopt;
}

std::optional<Exchange> ExchangeScanner::next_larger(ScanCursor& cursor) {
  const std::size_t k = members_.size();
  while (cursor.boundary_index < boundary_.size()) {
    const Rank added = boundary_[cursor.boundary_index];
    if (cursor.member_offset == 0) {
      // Skip members ranked above the incoming vertex.
      auto first_above = std::upper_bound(members_.begin(), members_.end(), added);
      cursor.member_offset = static_cast<std::size_t>(members_.end() - first_above);
    }
    while (cursor.member_offset < k) {
      const Exchange e{added, members_[member_at(cursor.member_offset)]};
      ++cursor.member_offset;
      if (connected_after(e)) return e;
    }
    ++cursor.boundary_index;
    cursor.member_offset = 0;
  }
  return std::nullopt;
}

ScanCursor ExchangeScanner::cursor_after(Exchange e) const {
  const std::uint32_t b = boundary_slot_[e.added];
  const std::uint32_t m = member_slot_[e.removed];
  if (b == kNoSlot || m == kNoSlot) throw ContractViolation("exchange does not belong to this set");
  return ScanCursor{b, members_.size() - m};
}

std::optional<Exchange> ExchangeScanner::first_smaller() {
  const std::size_t k = members_.size();
  for (Rank added : boundary_) {
    for (std::size_t offset = 0; offset < k; ++offset) {
      const Rank removed = members_[member_at(offset)];
      if (removed < added) break;
      if (connected_after({added, removed})) return Exchange{added, removed};
    }
  }
  return std::nullopt;
}

bool ExchangeScanner::first_smaller_is(Exchange target) {
  const std::size_t k = members_.size();
  for (Rank added : boundary_) {
    for (std::size_t offset = 0; offset < k; ++offset) {
      const Rank removed = members_[member_at(offset)];
      if (removed < added) break;
      const Exchange e{added, removed};
      if (e == target) return true;
      if (connected_after(e)) return false;
    }
    if (added == target.added) break;
  }
  return false;
}

LexKey apply_exchange(std::span<const Rank> members, Exchange e) {
  LexKey out;
  apply_exchange(members, e, out);
  return out;
}

void apply_exchange(std::span<const Rank> members, Exchange e, LexKey& out) {
  out.clear();
  bool placed = false;
  for (Rank r : members) {
    if (r == e.removed) continue;
    if (!placed && e.added < r) {
      out.push_back(e.added);
      placed = true;
    }
    out.push_back(r);
  }
  if (!placed) out.push_back(e.added);
}

Exchange exchange_between(std::span<const Rank> x, std::span<const Rank> y) {
  Exchange e;
  std::size_t only_x = 0;
  std::size_t only_y = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i] < y[j])) {
      e.removed = x[i++];
      ++only_x;
    } else if (i == x.size() || y[j] < x[i]) {
      e.added = y[j++];
      ++only_y;
    } else {
      ++i;
      ++j;
    }
  }
  if (only_x != 1 || only_y != 1) throw ContractViolation("sets do not differ by one exchange");
  return e;
}

KSet initial_node(const Graph& g, const VertexOrder& order, std::size_t k) {
  if (order.num_vertices() != g.num_vertices()) {
    throw ContractViolation("vertex order belongs to a different graph");
  }
  if (k < 1 || k > order.size()) {
    throw ContractViolation("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(order.size()) + "]");
  }
  auto prefix = order.sequence().first(k);
  return KSet{{prefix.begin(), prefix.end()}};
}

std::vector<KSet> neighbors(const Graph& g, const VertexOrder& order, const KSet& x,
                            ScanOptions options) {
  const auto key = checked_key(g, order, x);
  const RankedGraph ranked(g, order);
  ExchangeScanner scanner(ranked, options);
  scanner.load(key);
  std::vector<KSet> out;
  ScanCursor cursor;
  while (auto e = scanner.next(cursor)) {
    out.push_back(from_lex_key(order, apply_exchange(key, *e)));
  }
  return out;
}

KSet parent(const Graph& g, const VertexOrder& order, const KSet& x, const KSet& x0) {
  const auto key = checked_key(g, order, x);
  if (key == lex_key(order, x0)) throw ContractViolation("the initial node has no parent");
  const RankedGraph ranked(g, order);
  ExchangeScanner scanner(ranked);
  scanner.load(key);
  const auto e = scanner.first_smaller();
  if (!e) {
    throw InternalInvariantViolation("no lexicographically smaller neighbour exists; the vertex "
                                     "order is not a DFS order of this graph");
  }
  return from_lex_key(order, apply_exchange(key, *e));
}

}  // namespace kconn
