#include "kconn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "kconn/connectivity.hpp"
#include "kconn/errors.hpp"

namespace kconn {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t factor = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t reduced = result / g;
    const std::uint64_t divisor = i / g;
    const std::uint64_t f = factor / divisor;
    if (reduced > kMax / f) return kMax;
    result = reduced * f;
  }
  return result;
}

std::vector<KSet> enumerate_brute_force(const Graph& g, std::size_t k, const OracleOptions& options) {
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  return enumerate_brute_force(g, all, k, options);
}

std::vector<KSet> enumerate_brute_force(const Graph& g, std::span<const Vertex> within,
                                        std::size_t k, const OracleOptions& options) {
  if (k < 1) throw ContractViolation("k must be at least 1");
  const std::size_t n = within.size();
  if (k > n) return {};
  const std::uint64_t subsets = binomial(n, k);
  if (subsets > options.max_subsets) {
    throw ScaleGuardError("brute force would test " + std::to_string(subsets) +
                          " subsets (limit " + std::to_string(options.max_subsets) + ")");
  }

  // Index combinations in lexicographic order, so the output needs no sort.
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<Vertex> subset(k);
  std::vector<KSet> out;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = within[pick[i]];
    if (is_connected_subset(g, subset)) out.push_back(KSet{subset});
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::size_t ExplicitSupergraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& list : arcs) total += list.size();
  return total;
}

ExplicitSupergraph build_supergraph(const Graph& g, std::size_t k, const OracleOptions& options) {
  ExplicitSupergraph sg;
  sg.nodes = enumerate_brute_force(g, k, options);
  sg.arcs.resize(sg.nodes.size());
  std::map<std::vector<Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) index.emplace(sg.nodes[i].members, i);

  if (k == 1) {
    for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
      for (Vertex u : g.neighbors(sg.nodes[i].members.front())) sg.arcs[i].push_back(index.at({u}));
    }
  } else {
    // Every set at intersection k-1: drop one member, add any outside vertex.
    const std::size_t n = g.num_vertices();
    for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
      const auto& x = sg.nodes[i].members;
      for (std::size_t drop = 0; drop < k; ++drop) {
        for (Vertex u = 0; u < n; ++u) {
          if (std::binary_search(x.begin(), x.end(), u)) continue;
          std::vector<Vertex> y;
          y.reserve(k);
          for (std::size_t j = 0; j < k; ++j) {
            if (j != drop) y.push_back(x[j]);
          }
          y.insert(std::upper_bound(y.begin(), y.end(), u), u);
          if (auto it = index.find(y); it != index.end()) sg.arcs[i].push_back(it->second);
        }
      }
    }
  }
  for (auto& list : sg.arcs) std::sort(list.begin(), list.end());
  return sg;
}

StrongConnectivity check_strong_connectivity(const ExplicitSupergraph& sg) {
  const std::size_t count = sg.nodes.size();
  if (count == 0) throw ContractViolation("supergraph has no nodes");
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  StrongConnectivity result{true, 0};
  std::vector<std::size_t> dist(count);
  std::deque<std::size_t> queue;
  for (std::size_t source = 0; source < count; ++source) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[source] = 0;
    queue.assign(1, source);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      result.max_eccentricity = std::max(result.max_eccentricity, dist[v]);
      for (std::size_t u : sg.arcs[v]) {
        if (dist[u] != kUnseen) continue;
        dist[u] = dist[v] + 1;
        ++reached;
        queue.push_back(u);
      }
    }
    if (reached != count) result.connected = false;
  }
  return result;
}

double count_upper_bound(std::size_t n, std::size_t max_degree, std::size_t k) {
  if (max_degree < 2) throw ContractViolation("bound undefined for maximum degree below 2");
  if (k < 1) throw ContractViolation("k must be at least 1");
  const double delta = static_cast<double>(max_degree);
  const double kk = static_cast<double>(k);
  return static_cast<double>(n) * std::pow(std::numbers::e * delta, kk) / ((delta - 1.0) * kk);
}

}  // namespace kconn
