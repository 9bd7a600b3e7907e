#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "kconn/connectivity.hpp"
#include "kconn/oracle.hpp"
#include "kconn/supergraph.hpp"

namespace kconn::cli {

namespace {

class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

struct EngineRun {
  std::vector<std::vector<Vertex>> family;  // sorted
  bool duplicates = false;
  EnumStats stats;
};

EngineRun run_engine(const Graph& g, std::size_t k, Engine engine, std::uint64_t max_subsets) {
  EngineRun out;
  out.stats = enumerate_driver(
      g, k, engine, [&](const KSet& x) { out.family.push_back(sorted_labels(x)); },
      DriverOptions{max_subsets});
  std::sort(out.family.begin(), out.family.end());
  out.duplicates = std::adjacent_find(out.family.begin(), out.family.end()) != out.family.end();
  return out;
}

std::string describe(const KSet& x) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < x.members.size(); ++i) s << (i ? "," : "") << x.members[i];
  s << '}';
  return s.str();
}

// Structural checks on one connected component, relabelled to 0..n-1.
struct ComponentFindings {
  std::string neighborhood_bound;
  std::string smaller_neighbour;
  std::string parent_tree;
  std::string strong_connectivity;
  std::string beyond_n_minus_k;
};

void check_component(const Graph& h, std::size_t k, std::uint64_t max_subsets,
                     ComponentFindings& findings) {
  const auto order = dfs_ordering(h, 0);
  const auto family = enumerate_brute_force(h, k, OracleOptions{max_subsets});
  const KSet root = initial_node(h, order, k);
  const std::size_t n = h.num_vertices();
  const std::size_t limit = k * std::min(n - k, k * h.max_degree());

  std::map<LexKey, LexKey> parent_of;
  for (const auto& plain : family) {
    const KSet x = make_kset(order, plain.members);
    const auto around = neighbors(h, order, x);
    if (around.size() > limit && findings.neighborhood_bound.empty()) {
      findings.neighborhood_bound = describe(x) + " has " + std::to_string(around.size()) +
                                    " neighbours, bound " + std::to_string(limit);
    }
    if (x == root) continue;
    const bool has_smaller = std::any_of(around.begin(), around.end(), [&](const KSet& y) {
      return lex_compare(order, y, x) < 0;
    });
    if (!has_smaller && findings.smaller_neighbour.empty()) {
      findings.smaller_neighbour = describe(x) + " has no smaller neighbour";
    }
    const KSet up = parent(h, order, x, root);
    const bool adjacent = std::find(around.begin(), around.end(), up) != around.end();
    if ((!adjacent || lex_compare(order, up, x) >= 0) && findings.parent_tree.empty()) {
      findings.parent_tree = "parent of " + describe(x) + " is not a smaller neighbour";
    }
    parent_of.emplace(lex_key(order, x), lex_key(order, up));
  }

  // Every chain must reach the root; strict descent rules out cycles.
  const LexKey root_key = lex_key(order, root);
  for (const auto& [start, first] : parent_of) {
    LexKey at = first;
    std::size_t steps = 0;
    while (at != root_key && findings.parent_tree.empty()) {
      auto it = parent_of.find(at);
      if (it == parent_of.end() || ++steps > family.size()) {
        findings.parent_tree = "parent chain leaves the family or cycles";
        break;
      }
      at = it->second;
    }
  }
  if (parent_of.size() + 1 != family.size() && findings.parent_tree.empty()) {
    findings.parent_tree = "parent relation does not cover the family";
  }

  const auto sg = build_supergraph(h, k, OracleOptions{max_subsets});
  const auto sc = check_strong_connectivity(sg);
  // Sets that already overlap may need k-1 exchanges, more than n-k when
  // k > (n+1)/2 (e.g. the 6-cycle with k=4), so the limit is max(n-k, k-1).
  const std::size_t reach = std::max(n - k, k - 1);
  if ((!sc.connected || sc.max_eccentricity > reach) && findings.strong_connectivity.empty()) {
    findings.strong_connectivity = "component on " + std::to_string(n) + " vertices: connected=" +
                                   (sc.connected ? "yes" : "no") + " eccentricity=" +
                                   std::to_string(sc.max_eccentricity) + " limit " +
                                   std::to_string(reach);
  }
  if (sc.max_eccentricity > n - k && findings.beyond_n_minus_k.empty()) {
    findings.beyond_n_minus_k = "eccentricity " + std::to_string(sc.max_eccentricity) +
                                " exceeds n-k=" + std::to_string(n - k) + " on a component of " +
                                std::to_string(n) + " vertices";
  }
}

}  // namespace

std::vector<CheckResult> verify_instance(const Graph& g, std::size_t k, std::uint64_t max_subsets,
                                         const std::optional<GraphFamily>& family) {
  Report report;
  const auto dfs = run_engine(g, k, Engine::dfs, max_subsets);
  const auto bfs = run_engine(g, k, Engine::bfs, max_subsets);
  const auto oracle = run_engine(g, k, Engine::oracle, max_subsets);

  report.add("engine-equivalence",
             !dfs.duplicates && !bfs.duplicates && dfs.family == oracle.family &&
                 bfs.family == oracle.family,
             "dfs=" + std::to_string(dfs.family.size()) + " bfs=" + std::to_string(bfs.family.size()) +
                 " oracle=" + std::to_string(oracle.family.size()));
  report.add("dfs-delay", dfs.stats.max_gap <= 2, "max_gap=" + std::to_string(dfs.stats.max_gap));
  report.add("bfs-delay", bfs.stats.max_gap <= 1, "max_gap=" + std::to_string(bfs.stats.max_gap));
  report.add("dfs-memory", dfs.stats.peak_tracked_sets <= 3,
             "peak_tracked_sets=" + std::to_string(dfs.stats.peak_tracked_sets));
  if (g.max_degree() >= 2) {
    const double bound = count_upper_bound(g.num_vertices(), g.max_degree(), k);
    report.add("count-upper-bound", static_cast<double>(oracle.family.size()) <= bound,
               std::to_string(oracle.family.size()) + " <= " + std::to_string(bound));
  }

  ComponentFindings findings;
  for (const auto& component : connected_components(g)) {
    if (component.size() < k) continue;
    check_component(induced_subgraph(g, component), k, max_subsets, findings);
  }
  report.add("neighborhood-size-bound", findings.neighborhood_bound.empty(),
             findings.neighborhood_bound);
  report.add("smaller-neighbour-exists", findings.smaller_neighbour.empty(), findings.smaller_neighbour);
  report.add("parent-tree", findings.parent_tree.empty(), findings.parent_tree);
  report.add("supergraph-strongly-connected", findings.strong_connectivity.empty(),
             findings.strong_connectivity.empty() ? findings.beyond_n_minus_k
                                                  : findings.strong_connectivity);

  if (family && family->kind == GraphFamily::Kind::counterexample_path) {
    // Under the label order (not a DFS order here) the set {k, ..., 2k-1}
    // has exactly two neighbours, both larger.
    const std::size_t fk = family->m;
    const auto by_label = label_ordering(g);
    std::vector<Vertex> members;
    for (std::size_t i = fk; i < 2 * fk; ++i) members.push_back(static_cast<Vertex>(i));
    const KSet x = make_kset(by_label, members);
    const auto around = neighbors(g, by_label, x);
    const bool all_larger = std::all_of(around.begin(), around.end(), [&](const KSet& y) {
      return lex_compare(by_label, y, x) > 0;
    });
    report.add("non-dfs-order-counterexample", around.size() == 2 && all_larger,
               describe(x) + " has " + std::to_string(around.size()) + " neighbours" +
                   (all_larger ? ", all larger" : ", some smaller"));
  }
  return report.take();
}

}  // namespace kconn::cli
