#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/kset.hpp"

namespace kconn {

struct OracleOptions {
  // Refuse instances with more than this many k-subsets.
  std::uint64_t max_subsets = 5'000'000;
};

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Every k-subset tested with is_connected_subset; the connected ones in
// ascending label order, the list itself lexicographically sorted.
// Throws ScaleGuardError past options.max_subsets.
std::vector<KSet> enumerate_brute_force(const Graph& g, std::size_t k,
                                        const OracleOptions& options = {});
// Restricted to subsets of `within` (sorted labels).
std::vector<KSet> enumerate_brute_force(const Graph& g, std::span<const Vertex> within,
                                        std::size_t k, const OracleOptions& options = {});

// The exchange supergraph built by set intersection: nodes are the connected
// k-sets in label-lexicographic order, arcs join sets sharing k-1 vertices
// (adjacent singletons when k = 1). Arc lists are sorted.
struct ExplicitSupergraph {
  std::vector<KSet> nodes;
  std::vector<std::vector<std::size_t>> arcs;

  std::size_t arc_count() const;
};

ExplicitSupergraph build_supergraph(const Graph& g, std::size_t k,
                                    const OracleOptions& options = {});

struct StrongConnectivity {
  bool connected = false;
  std::size_t max_eccentricity = 0;  // over reachable pairs
};

// BFS from every node. Throws ContractViolation on an empty supergraph.
StrongConnectivity check_strong_connectivity(const ExplicitSupergraph& sg);

// n * (e * max_degree)^k / ((max_degree - 1) * k). Throws ContractViolation
// for max_degree < 2 or k < 1.
double count_upper_bound(std::size_t n, std::size_t max_degree, std::size_t k);

}  // namespace kconn
