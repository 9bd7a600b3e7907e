#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "corpus.hpp"
#include "kconn/errors.hpp"
#include "kconn/generators.hpp"
#include "kconn/oracle.hpp"
#include "kconn/ordering.hpp"
#include "kconn/supergraph.hpp"

namespace kconn {
namespace {

using Labels = std::vector<Vertex>;
using Family = std::vector<Labels>;

Family labels_of(const std::vector<KSet>& sets) {
  Family out;
  for (const auto& s : sets) out.push_back(sorted_labels(s));
  return out;
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 3), 10u);
  EXPECT_EQ(binomial(12, 6), 924u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(labels_of(enumerate_brute_force(generate_graph(GraphFamily::path(6)), 3)),
            (Family{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
  EXPECT_EQ(enumerate_brute_force(generate_graph(GraphFamily::complete(5)), 3).size(), 10u);
  EXPECT_EQ(labels_of(enumerate_brute_force(generate_graph(GraphFamily::cycle(5)), 5)),
            (Family{{0, 1, 2, 3, 4}}));
}

TEST(BruteForce, MatchesBitmaskReference) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_graph(GraphFamily::gnp(11, 0.25, seed));
    for (std::size_t k = 1; k <= 11; ++k) {
      ASSERT_EQ(labels_of(enumerate_brute_force(g, k)), testing::reference_family(g, k));
    }
  }
}

TEST(BruteForce, RestrictedToSubset) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {3, 4}};
  const Graph g = Graph::from_edges(5, edges);
  const Labels within{0, 1, 2};
  EXPECT_EQ(labels_of(enumerate_brute_force(g, within, 2)), (Family{{0, 1}, {1, 2}}));
}

TEST(BruteForce, ScaleGuard) {
  const Graph g = generate_graph(GraphFamily::path(40));
  EXPECT_THROW(enumerate_brute_force(g, 20, {.max_subsets = 1000}), ScaleGuardError);
  EXPECT_NO_THROW(enumerate_brute_force(g, 2, {.max_subsets = 1000}));
}

TEST(BruteForce, ClosedFormCounts) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(enumerate_brute_force(generate_graph(GraphFamily::path(n)), k).size(), n - k + 1);
      if (n >= 3 && k < n) {
        EXPECT_EQ(enumerate_brute_force(generate_graph(GraphFamily::cycle(n)), k).size(), n);
      }
      EXPECT_EQ(enumerate_brute_force(generate_graph(GraphFamily::complete(n)), k).size(),
                binomial(n, k));
      if (k >= 2) {
        EXPECT_EQ(enumerate_brute_force(generate_graph(GraphFamily::star(n)), k).size(),
                  binomial(n - 1, k - 1));
      }
    }
  }
}

TEST(Supergraph, PathExample) {
  const auto sg = build_supergraph(generate_graph(GraphFamily::path(5)), 3);
  ASSERT_EQ(labels_of(sg.nodes), (Family{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}));
  EXPECT_EQ(sg.arcs, (std::vector<std::vector<std::size_t>>{{1}, {0, 2}, {1}}));
  const auto sc = check_strong_connectivity(sg);
  EXPECT_TRUE(sc.connected);
  EXPECT_EQ(sc.max_eccentricity, 2u);
}

TEST(Supergraph, CompleteExample) {
  const auto sg = build_supergraph(generate_graph(GraphFamily::complete(4)), 3);
  ASSERT_EQ(sg.nodes.size(), 4u);
  EXPECT_EQ(sg.arc_count(), 12u);
  const auto sc = check_strong_connectivity(sg);
  EXPECT_TRUE(sc.connected);
  EXPECT_EQ(sc.max_eccentricity, 1u);
}

TEST(Supergraph, SmallExamples) {
  const auto p6 = build_supergraph(generate_graph(GraphFamily::path(6)), 5);
  EXPECT_EQ(p6.nodes.size(), 2u);
  EXPECT_EQ(p6.arc_count(), 2u);
  const auto single = build_supergraph(generate_graph(GraphFamily::path(3)), 3);
  const auto sc = check_strong_connectivity(single);
  EXPECT_TRUE(sc.connected);
  EXPECT_EQ(sc.max_eccentricity, 0u);
  EXPECT_THROW(check_strong_connectivity(ExplicitSupergraph{}), ContractViolation);
}

// The connected 4-sets of the 6-cycle are its six arcs and the supergraph
// is itself a 6-cycle, so opposite arcs are 3 > n-k = 2 exchanges apart.
TEST(Supergraph, SixCycleEccentricityExceedsNMinusK) {
  const auto sg = build_supergraph(generate_graph(GraphFamily::cycle(6)), 4);
  ASSERT_EQ(sg.nodes.size(), 6u);
  for (const auto& arcs : sg.arcs) EXPECT_EQ(arcs.size(), 2u);
  const auto sc = check_strong_connectivity(sg);
  EXPECT_TRUE(sc.connected);
  EXPECT_EQ(sc.max_eccentricity, 3u);
}

TEST(Supergraph, DisconnectedGraphGivesDisconnectedSupergraph) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  EXPECT_FALSE(check_strong_connectivity(build_supergraph(Graph::from_edges(4, edges), 2)).connected);
}

// Arcs built by intersection equal the union of generated neighbourhoods.
TEST(Supergraph, ArcsMatchNeighbourhoods) {
  for (const auto& [name, g] : testing::family_corpus(9)) {
    const auto order = dfs_ordering(g, 0);
    for (std::size_t k = 1; k <= g.num_vertices(); ++k) {
      const auto sg = build_supergraph(g, k);
      std::set<std::pair<Labels, Labels>> from_arcs, from_neighbors;
      for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
        const Labels x = sorted_labels(sg.nodes[i]);
        for (std::size_t j : sg.arcs[i]) from_arcs.emplace(x, sorted_labels(sg.nodes[j]));
        for (const auto& y : neighbors(g, order, make_kset(order, x))) {
          from_neighbors.emplace(x, sorted_labels(y));
        }
      }
      ASSERT_EQ(from_arcs, from_neighbors) << name << " k=" << k;
    }
  }
}

double bound(double n, double delta, double k) {
  return n * std::pow(std::numbers::e * delta, k) / ((delta - 1) * k);
}

TEST(UpperBound, Examples) {
  EXPECT_NEAR(count_upper_bound(5, 4, 3), bound(5, 4, 3), 1e-9);
  EXPECT_NEAR(count_upper_bound(5, 4, 3), 714.1, 0.1);
  EXPECT_GE(count_upper_bound(5, 4, 3), 10.0);
  EXPECT_NEAR(count_upper_bound(6, 2, 3), bound(6, 2, 3), 1e-9);
  EXPECT_NEAR(count_upper_bound(6, 2, 3), 321.4, 0.05);
  EXPECT_THROW(count_upper_bound(5, 1, 3), ContractViolation);
  EXPECT_THROW(count_upper_bound(5, 3, 0), ContractViolation);
}

}  // namespace
}  // namespace kconn
