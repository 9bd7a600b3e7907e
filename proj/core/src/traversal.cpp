#include "kconn/traversal.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <set>
#include <string>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"
#include "kconn/oracle.hpp"
#include "kconn/supergraph.hpp"

namespace kconn {

namespace {

// Turns engine events into EnumStats. One meter may span several runs.
class DelayMeter {
 public:
  void processed() {
    ++stats_.nodes_processed;
    ++gap_;
  }
  void output() {
    ++stats_.outputs;
    stats_.max_gap = std::max(stats_.max_gap, gap_);
    gap_ = 0;
  }
  void parent_call() { ++stats_.parent_calls; }
  void tracked(std::uint64_t live) { stats_.peak_tracked_sets = std::max(stats_.peak_tracked_sets, live); }

  EnumStats finish() const {
    EnumStats out = stats_;
    out.max_gap = std::max(out.max_gap, gap_);
    return out;
  }

 private:
  EnumStats stats_;
  std::uint64_t gap_ = 0;
};

// Reused output buffer: ranks back to labels.
class Emitter {
 public:
  Emitter(const VertexOrder& order, const OutputSink& sink, DelayMeter& meter)
      : order_(order), sink_(sink), meter_(meter) {}

  void operator()(std::span<const Rank> key) {
    buffer_.members.resize(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) buffer_.members[i] = order_.vertex_at(key[i]);
    sink_(buffer_);
    meter_.output();
  }

 private:
  const VertexOrder& order_;
  const OutputSink& sink_;
  DelayMeter& meter_;
  KSet buffer_;
};

void check_k(const VertexOrder& order, std::size_t k) {
  if (k < 1 || k > order.size()) {
    throw ContractViolation("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(order.size()) + "]");
  }
}

VertexOrder whole_graph_order(const Graph& g) {
  if (g.num_vertices() == 0) throw ContractViolation("graph has no vertices");
  auto order = dfs_ordering(g, 0);
  if (order.size() != g.num_vertices()) throw ContractViolation("graph is not connected");
  return order;
}

void run_bfs(const RankedGraph& graph, std::size_t k, const OutputSink& sink, DelayMeter& meter) {
  Emitter emit(graph.order(), sink, meter);
  ExchangeScanner scanner(graph);
  LexKey scratch;
  scratch.reserve(k);
  // Ordered store: membership costs O(log N) key comparisons.
  std::set<LexKey> seen;
  std::queue<const LexKey*> pending;

  LexKey root(k);
  for (std::size_t i = 0; i < k; ++i) root[i] = static_cast<Rank>(i);
  pending.push(&*seen.insert(std::move(root)).first);
  meter.tracked(seen.size());

  while (!pending.empty()) {
    const LexKey& current = *pending.front();
    pending.pop();
    emit(current);
    meter.processed();
    scanner.load(current);
    ScanCursor cursor;
    while (auto e = scanner.next(cursor)) {
      apply_exchange(current, *e, scratch);
      if (seen.count(scratch) == 0) pending.push(&*seen.insert(scratch).first);
    }
    meter.tracked(seen.size());
  }
}

void run_reverse_search(const RankedGraph& graph, std::size_t k, const OutputSink& sink,
                        DelayMeter& meter) {
  Emitter emit(graph.order(), sink, meter);
  ExchangeScanner scanner(graph);  // neighbourhood of the current node
  ExchangeScanner probe(graph);    // parent tests on candidates

  LexKey current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = static_cast<Rank>(i);
  LexKey candidate;
  candidate.reserve(k);
  std::size_t depth = 1;
  meter.tracked(1);

  auto arrive = [&] {
    meter.processed();
    if (depth % 2 == 1) emit(current);
    scanner.load(current);
  };

  arrive();
  ScanCursor cursor;
  while (true) {
    bool descended = false;
    while (auto e = scanner.next_larger(cursor)) {
      apply_exchange(current, *e, candidate);
      meter.tracked(2);
      probe.load(candidate);
      meter.parent_call();
      // current is the parent iff undoing e is the candidate's first
      // lexicographically smaller exchange.
      if (probe.first_smaller_is({e->removed, e->added})) {
        std::swap(current, candidate);
        ++depth;
        arrive();
        cursor = ScanCursor{};
        descended = true;
        break;
      }
    }
    if (descended) continue;

    if (depth % 2 == 0) emit(current);
    if (depth == 1) break;

    meter.parent_call();
    const auto up = scanner.first_smaller();
    if (!up) {
      throw InternalInvariantViolation("reverse search: a non-initial set has no smaller "
                                       "neighbour");
    }
    apply_exchange(current, *up, candidate);
    meter.tracked(2);
    // In the parent's frame the step down added up->removed for up->added.
    const Exchange down{up->removed, up->added};
    std::swap(current, candidate);
    --depth;
    scanner.load(current);
    cursor = scanner.cursor_after(down);
  }
}

}  // namespace

void print_stats(std::ostream& out, const EnumStats& stats) {
  out << "outputs=" << stats.outputs << '\n'
      << "nodes_processed=" << stats.nodes_processed << '\n'
      << "max_gap=" << stats.max_gap << '\n'
      << "parent_calls=" << stats.parent_calls << '\n'
      << "peak_tracked_sets=" << stats.peak_tracked_sets << '\n';
}

Engine parse_engine(std::string_view name) {
  if (name == "dfs") return Engine::dfs;
  if (name == "bfs") return Engine::bfs;
  if (name == "oracle") return Engine::oracle;
  throw ValidationError("unknown engine '" + std::string(name) + "'");
}

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::dfs: return "dfs";
    case Engine::bfs: return "bfs";
    case Engine::oracle: return "oracle";
  }
  return "?";
}

EnumStats enumerate_bfs(const Graph& g, std::size_t k, const OutputSink& sink) {
  return enumerate_bfs(g, whole_graph_order(g), k, sink);
}

EnumStats enumerate_bfs(const Graph& g, const VertexOrder& order, std::size_t k,
                        const OutputSink& sink) {
  check_k(order, k);
  const RankedGraph graph(g, order);
  DelayMeter meter;
  run_bfs(graph, k, sink, meter);
  return meter.finish();
}

EnumStats enumerate_reverse_search(const Graph& g, std::size_t k, const OutputSink& sink) {
  return enumerate_reverse_search(g, whole_graph_order(g), k, sink);
}

EnumStats enumerate_reverse_search(const Graph& g, const VertexOrder& order, std::size_t k,
                                   const OutputSink& sink) {
  check_k(order, k);
  const RankedGraph graph(g, order);
  DelayMeter meter;
  run_reverse_search(graph, k, sink, meter);
  return meter.finish();
}

EnumStats enumerate_driver(const Graph& g, std::size_t k, Engine engine, const OutputSink& sink,
                           const DriverOptions& options) {
  if (k < 1) throw ContractViolation("k must be at least 1");
  DelayMeter meter;
  for (const auto& component : connected_components(g)) {
    if (component.size() < k) continue;
    switch (engine) {
      case Engine::dfs:
        run_reverse_search(RankedGraph(g, dfs_ordering(g, component.front())), k, sink, meter);
        break;
      case Engine::bfs:
        run_bfs(RankedGraph(g, dfs_ordering(g, component.front())), k, sink, meter);
        break;
      case Engine::oracle: {
        const auto family =
            enumerate_brute_force(g, component, k, OracleOptions{options.max_subsets});
        for (const auto& x : family) {
          sink(x);
          meter.output();
        }
        meter.tracked(family.size());
        break;
      }
    }
  }
  return meter.finish();
}

}  // namespace kconn
