#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "corpus.hpp"
#include "kconn/errors.hpp"
#include "kconn/generators.hpp"
#include "kconn/kset.hpp"
#include "kconn/ordering.hpp"
#include "kconn/supergraph.hpp"

namespace kconn {
namespace {

using Labels = std::vector<Vertex>;
using Family = std::vector<Labels>;

KSet kset(const VertexOrder& order, Labels v) { return make_kset(order, std::move(v)); }

Family labels_of(const std::vector<KSet>& sets) {
  Family out;
  for (const auto& s : sets) out.push_back(sorted_labels(s));
  return out;
}

Family sorted(Family f) {
  std::sort(f.begin(), f.end());
  return f;
}

// Literal scan: u over V \ X by ascending rank, v over X by descending rank.
// keep(u, v, candidate) decides whether the pair is reported.
template <class Keep>
Family scan_pairs(const Graph& g, const VertexOrder& order, const Labels& x, Keep keep) {
  Labels by_rank(x);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](Vertex a, Vertex b) { return order.rank(a) > order.rank(b); });
  Family out;
  for (Rank r = 0; r < order.size(); ++r) {
    const Vertex u = order.vertex_at(r);
    if (std::count(x.begin(), x.end(), u)) continue;
    for (Vertex v : by_rank) {
      Labels y;
      for (Vertex w : x) {
        if (w != v) y.push_back(w);
      }
      y.push_back(u);
      std::sort(y.begin(), y.end());
      const bool valid = x.size() == 1 ? g.has_edge(u, v) : testing::bfs_connected(g, y);
      if (valid && keep(u, v)) out.push_back(std::move(y));
    }
  }
  return out;
}

Family reference_neighbors(const Graph& g, const VertexOrder& order, const Labels& x) {
  return scan_pairs(g, order, x, [](Vertex, Vertex) { return true; });
}

std::optional<Labels> reference_parent(const Graph& g, const VertexOrder& order, const Labels& x) {
  auto found = scan_pairs(g, order, x, [&](Vertex u, Vertex v) {
    return order.rank(u) < order.rank(v);
  });
  if (found.empty()) return std::nullopt;
  return found.front();
}

bool lex_less(const VertexOrder& order, const Labels& a, const Labels& b) {
  auto key = [&](const Labels& s) {
    std::vector<Rank> r;
    for (Vertex v : s) r.push_back(order.rank(v));
    std::sort(r.begin(), r.end());
    return r;
  };
  return key(a) < key(b);
}

TEST(LexCompare, Examples) {
  const auto order = VertexOrder::from_sequence(5, {0, 1, 2, 3, 4});
  EXPECT_EQ(lex_compare(order, kset(order, {0, 1, 2}), kset(order, {0, 1, 3})),
            std::strong_ordering::less);
  EXPECT_EQ(lex_compare(order, kset(order, {0, 1, 2}), kset(order, {2, 1, 0})),
            std::strong_ordering::equal);
  EXPECT_EQ(lex_compare(order, kset(order, {0, 4}), kset(order, {1, 2})),
            std::strong_ordering::less);
  EXPECT_EQ(lex_compare(order, kset(order, {3, 4}), kset(order, {1, 2})),
            std::strong_ordering::greater);
}

TEST(LexCompare, UsesRanksNotLabels) {
  const auto order = VertexOrder::from_sequence(4, {3, 2, 1, 0});
  EXPECT_EQ(lex_compare(order, kset(order, {3, 0}), kset(order, {2, 1})),
            std::strong_ordering::less);
  EXPECT_EQ(kset(order, {0, 3}).members, (Labels{3, 0}));
  EXPECT_EQ(lex_key(order, kset(order, {0, 3})), (LexKey{0, 3}));
}

TEST(LexCompare, Errors) {
  const auto partial = VertexOrder::from_sequence(4, {0, 1});
  EXPECT_THROW(make_kset(partial, {0, 3}), ContractViolation);
  EXPECT_THROW(make_kset(partial, {0, 0}), ContractViolation);
  const auto order = VertexOrder::from_sequence(4, {0, 1, 2, 3});
  EXPECT_THROW(lex_compare(order, kset(order, {0}), kset(order, {0, 1})), ContractViolation);
}

TEST(InitialNode, Examples) {
  const Graph p5 = generate_graph(GraphFamily::path(5));
  EXPECT_EQ(sorted_labels(initial_node(p5, dfs_ordering(p5, 0), 3)), (Labels{0, 1, 2}));
  const Graph star = generate_graph(GraphFamily::star(5));
  EXPECT_EQ(sorted_labels(initial_node(star, dfs_ordering(star, 0), 3)), (Labels{0, 1, 2}));
  const Graph cx = generate_graph(GraphFamily::counterexample_path(7, 2));
  EXPECT_EQ(sorted_labels(initial_node(cx, dfs_ordering(cx, 0), 2)), (Labels{0, 1}));
  EXPECT_EQ(sorted_labels(initial_node(cx, dfs_ordering(cx, 0), 3)), (Labels{0, 1, 6}));
  EXPECT_THROW(initial_node(p5, dfs_ordering(p5, 0), 0), ContractViolation);
  EXPECT_THROW(initial_node(p5, dfs_ordering(p5, 0), 6), ContractViolation);
}

TEST(Neighbors, PathExample) {
  const Graph p5 = generate_graph(GraphFamily::path(5));
  const auto order = dfs_ordering(p5, 0);
  const Labels x{1, 2, 3};
  const Family expected{{0, 1, 2}, {2, 3, 4}};
  ASSERT_EQ(sorted(reference_neighbors(p5, order, x)), expected);
  EXPECT_EQ(labels_of(neighbors(p5, order, kset(order, x))), expected);
}

TEST(Neighbors, CompleteExample) {
  const Graph k4 = generate_graph(GraphFamily::complete(4));
  const auto order = dfs_ordering(k4, 0);
  const Family expected{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  EXPECT_EQ(sorted(labels_of(neighbors(k4, order, kset(order, {0, 1, 2})))), expected);
}

TEST(Neighbors, StarExample) {
  const Graph star = generate_graph(GraphFamily::star(5));
  const auto order = dfs_ordering(star, 0);
  const Labels x{0, 1, 2};
  const Family expected{{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}};
  ASSERT_EQ(sorted(reference_neighbors(star, order, x)), expected);
  EXPECT_EQ(sorted(labels_of(neighbors(star, order, kset(order, x)))), expected);
}

TEST(Neighbors, SingletonsUseAdjacency) {
  const Graph c5 = generate_graph(GraphFamily::cycle(5));
  const auto order = dfs_ordering(c5, 0);
  EXPECT_EQ(labels_of(neighbors(c5, order, kset(order, {0}))), (Family{{1}, {4}}));
}

TEST(Neighbors, RejectsDisconnectedSets) {
  const Graph p5 = generate_graph(GraphFamily::path(5));
  const auto order = dfs_ordering(p5, 0);
  EXPECT_THROW(neighbors(p5, order, kset(order, {0, 2})), ContractViolation);
}

// Stream order and content against the literal pair scan, with and without
// the cut-vertex prefilter, on every connected graph up to 6 vertices under
// a DFS order and under a shuffled non-DFS order.
TEST(Neighbors, MatchesPairScanExhaustively) {
  for (std::size_t n = 1; n <= 6; ++n) {
    testing::for_each_connected_graph(n, [&](const Graph& g) {
      std::vector<Vertex> reversed(n);
      for (Vertex v = 0; v < n; ++v) reversed[v] = static_cast<Vertex>(n - 1 - v);
      for (const auto& order : {dfs_ordering(g, 0), VertexOrder::from_sequence(n, reversed)}) {
        for (std::size_t k = 1; k <= n; ++k) {
          for (const auto& x : testing::reference_family(g, k)) {
            const KSet xs = kset(order, x);
            const auto expected = reference_neighbors(g, order, x);
            ASSERT_EQ(labels_of(neighbors(g, order, xs)), expected);
            ASSERT_EQ(labels_of(neighbors(g, order, xs, {.cut_vertex_prefilter = false})),
                      expected);
          }
        }
      }
    });
  }
}

TEST(Neighbors, SymmetricAndWithinSizeBound) {
  for (const auto& [name, g] : testing::family_corpus(9)) {
    const auto order = dfs_ordering(g, 0);
    const std::size_t n = g.num_vertices();
    for (std::size_t k = 1; k <= n; ++k) {
      const auto family = testing::reference_family(g, k);
      std::map<Labels, Family> adj;
      for (const auto& x : family) {
        adj[x] = sorted(labels_of(neighbors(g, order, kset(order, x))));
        ASSERT_LE(adj[x].size(), k * std::min(n - k, k * g.max_degree())) << name;
        ASSERT_EQ(adj[x], testing::reference_exchanges(g, x)) << name;
      }
      for (const auto& [x, ys] : adj) {
        for (const auto& y : ys) ASSERT_TRUE(std::binary_search(adj[y].begin(), adj[y].end(), x));
      }
    }
  }
}

TEST(Parent, PathExamples) {
  const Graph p5 = generate_graph(GraphFamily::path(5));
  const auto order = dfs_ordering(p5, 0);
  const KSet x0 = initial_node(p5, order, 3);
  ASSERT_EQ(reference_parent(p5, order, {2, 3, 4}), (Labels{1, 2, 3}));
  ASSERT_EQ(reference_parent(p5, order, {1, 2, 3}), (Labels{0, 1, 2}));
  EXPECT_EQ(sorted_labels(parent(p5, order, kset(order, {2, 3, 4}), x0)), (Labels{1, 2, 3}));
  EXPECT_EQ(sorted_labels(parent(p5, order, kset(order, {1, 2, 3}), x0)), (Labels{0, 1, 2}));
  EXPECT_THROW(parent(p5, order, x0, x0), ContractViolation);
}

TEST(Parent, CompleteExample) {
  const Graph k4 = generate_graph(GraphFamily::complete(4));
  const auto order = dfs_ordering(k4, 0);
  ASSERT_EQ(reference_parent(k4, order, {1, 2, 3}), (Labels{0, 1, 2}));
  EXPECT_EQ(sorted_labels(parent(k4, order, kset(order, {1, 2, 3}), initial_node(k4, order, 3))),
            (Labels{0, 1, 2}));
}

TEST(Parent, MatchesScanAndDescendsExhaustively) {
  for (std::size_t n = 1; n <= 6; ++n) {
    testing::for_each_connected_graph(n, [&](const Graph& g) {
      const auto order = dfs_ordering(g, 0);
      for (std::size_t k = 1; k <= n; ++k) {
        const KSet x0 = initial_node(g, order, k);
        for (const auto& x : testing::reference_family(g, k)) {
          if (x == sorted_labels(x0)) continue;
          const auto expected = reference_parent(g, order, x);
          ASSERT_TRUE(expected.has_value());
          const KSet p = parent(g, order, kset(order, x), x0);
          ASSERT_EQ(sorted_labels(p), *expected);
          ASSERT_TRUE(lex_less(order, sorted_labels(p), x));
          const auto around = labels_of(neighbors(g, order, p));
          ASSERT_TRUE(std::count(around.begin(), around.end(), x));
        }
      }
    });
  }
}

TEST(InitialNode, IsLexMinimum) {
  for (const auto& [name, g] : testing::family_corpus(10)) {
    const auto order = dfs_ordering(g, 0);
    for (std::size_t k = 1; k <= g.num_vertices(); ++k) {
      const Labels x0 = sorted_labels(initial_node(g, order, k));
      const auto family = testing::reference_family(g, k);
      ASSERT_TRUE(std::binary_search(family.begin(), family.end(), x0)) << name;
      for (const auto& x : family) ASSERT_FALSE(lex_less(order, x, x0)) << name;
    }
  }
}

TEST(Counterexample, NonDfsOrderHasNoSmallerNeighbour) {
  // Under the path's left-to-right labelling, {2, 3} (the sets k+1..2k in
  // one-based terms) is a local minimum that is not the global minimum.
  const Graph g = generate_graph(GraphFamily::counterexample_path(7, 2));
  const auto order = label_ordering(g);
  const Labels x{2, 3};
  const auto around = labels_of(neighbors(g, order, kset(order, x)));
  ASSERT_EQ(around.size(), 2u);
  for (const auto& y : around) EXPECT_TRUE(lex_less(order, x, y));
  EXPECT_THROW(parent(g, order, kset(order, x), kset(order, {0, 1})), InternalInvariantViolation);
}

TEST(ExchangeScanner, CursorRoundTrip) {
  const Graph g = generate_graph(GraphFamily::grid(3, 3));
  const RankedGraph rg(g, dfs_ordering(g, 0));
  ExchangeScanner scanner(rg);
  const LexKey x{0, 1, 2, 5};
  scanner.load(x);
  ScanCursor cursor;
  std::vector<Exchange> all;
  while (auto e = scanner.next(cursor)) all.push_back(*e);
  ASSERT_FALSE(all.empty());
  for (std::size_t i = 0; i < all.size(); ++i) {
    ScanCursor resume = scanner.cursor_after(all[i]);
    auto e = scanner.next(resume);
    if (i + 1 < all.size()) {
      ASSERT_TRUE(e.has_value());
      EXPECT_EQ(*e, all[i + 1]);
    } else {
      EXPECT_FALSE(e.has_value());
    }
    const LexKey y = apply_exchange(x, all[i]);
    EXPECT_EQ(exchange_between(x, y), all[i]);
  }
  auto first = scanner.first_smaller();
  if (first) EXPECT_TRUE(scanner.first_smaller_is(*first));
}

}  // namespace
}  // namespace kconn
