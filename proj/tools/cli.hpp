#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kconn/generators.hpp"
#include "kconn/graph.hpp"
#include "kconn/traversal.hpp"

namespace kconn::cli {

enum class Mode { list, count, stats, verify };

Mode parse_mode(std::string_view name);

struct RunConfig {
  std::optional<std::string> input_path;
  std::optional<std::string> generator;
  std::size_t k = 0;
  Engine engine = Engine::dfs;
  Mode mode = Mode::list;
  std::string output = "-";
  std::uint64_t max_subsets = 5'000'000;
  std::uint64_t seed = 0;
  bool one_based = false;
};

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailed = 2,
  kInternalError = 3,
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Cross-checks the engines against the brute-force oracle on g and tests the
// structural properties the enumeration relies on. family, when given, adds
// the non-DFS-order counterexample check for counterexample paths.
std::vector<CheckResult> verify_instance(const Graph& g, std::size_t k, std::uint64_t max_subsets,
                                         const std::optional<GraphFamily>& family);

// Executes one configured run. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, then run(). --output other than "-" overrides out.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kconn::cli
