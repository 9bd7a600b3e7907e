#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kconn/errors.hpp"

namespace kconn::cli {

namespace {

Graph load_graph(const RunConfig& config, std::optional<GraphFamily>& family) {
  if (config.generator) {
    family = parse_family(*config.generator, config.seed);
    return generate_graph(*family);
  }
  std::ifstream in(*config.input_path);
  if (!in) throw ValidationError("cannot open '" + *config.input_path + "'");
  return parse_edge_list(in, ParseOptions{config.one_based});
}

void write_set(std::ostream& out, const KSet& x) {
  const auto labels = sorted_labels(x);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ' ';
    out << labels[i];
  }
  out << '\n' << std::flush;
}

}  // namespace

Mode parse_mode(std::string_view name) {
  if (name == "list") return Mode::list;
  if (name == "count") return Mode::count;
  if (name == "stats") return Mode::stats;
  if (name == "verify") return Mode::verify;
  throw ValidationError("unknown mode '" + std::string(name) + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.input_path.has_value() == config.generator.has_value()) {
      throw ValidationError("exactly one of --input and --gen is required");
    }
    if (config.k < 1) throw ValidationError("--k must be at least 1");

    std::optional<GraphFamily> family;
    const Graph g = load_graph(config, family);
    const DriverOptions options{config.max_subsets};

    switch (config.mode) {
      case Mode::list:
        enumerate_driver(g, config.k, config.engine, [&](const KSet& x) { write_set(out, x); },
                         options);
        return kSuccess;
      case Mode::count: {
        const auto stats = enumerate_driver(g, config.k, config.engine, [](const KSet&) {}, options);
        out << stats.outputs << '\n';
        return kSuccess;
      }
      case Mode::stats: {
        const auto stats = enumerate_driver(g, config.k, config.engine, [](const KSet&) {}, options);
        print_stats(out, stats);
        return kSuccess;
      }
      case Mode::verify: {
        bool all_passed = true;
        for (const auto& check : verify_instance(g, config.k, config.max_subsets, family)) {
          out << (check.passed ? "PASS " : "FAIL ") << check.name;
          if (!check.detail.empty()) out << ": " << check.detail;
          out << '\n';
          all_passed = all_passed && check.passed;
        }
        return all_passed ? kSuccess : kVerificationFailed;
      }
    }
    return kUsageError;
  } catch (const InternalInvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the connected induced subgraphs with exactly k vertices"};
  RunConfig config;
  std::string input;
  std::string generator;
  std::string engine = "dfs";
  std::string mode = "list";

  auto* input_opt = app.add_option("--input", input, "Edge-list file")->check(CLI::ExistingFile);
  auto* gen_opt = app.add_option("--gen", generator,
                                 "Generator, e.g. path:6, grid:3:4, gnp:40:0.15:7, "
                                 "counterexample-path:7:2");
  input_opt->excludes(gen_opt);
  app.add_option("--k", config.k, "Subgraph order")->required();
  app.add_option("--engine", engine, "Enumeration engine")
      ->check(CLI::IsMember({"dfs", "bfs", "oracle"}));
  app.add_option("--mode", mode, "Output mode")
      ->check(CLI::IsMember({"list", "count", "stats", "verify"}));
  app.add_option("--output", config.output, "Output file, '-' for stdout");
  app.add_option("--max-subsets", config.max_subsets, "Brute-force subset budget");
  app.add_option("--seed", config.seed, "Seed for gnp when the spec omits one");
  app.add_flag("--one-based", config.one_based, "Input labels start at 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  if (input_opt->count() > 0) config.input_path = input;
  if (gen_opt->count() > 0) config.generator = generator;
  config.engine = parse_engine(engine);
  config.mode = parse_mode(mode);

  if (config.output != "-") {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot write '" << config.output << "'\n";
      return kUsageError;
    }
    return run(config, file, err);
  }
  return run(config, out, err);
}

}  // namespace kconn::cli
