#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "kconn/graph.hpp"

namespace kconn {

// Descriptor for one of the built-in graph families.
struct GraphFamily {
  enum class Kind { path, cycle, complete, star, grid, gnp, counterexample_path };

  Kind kind = Kind::path;
  std::size_t n = 0;     // vertex count; rows for grid
  std::size_t m = 0;     // columns for grid, k for counterexample_path
  double p = 0.0;        // edge probability for gnp
  std::uint64_t seed = 0;

  static GraphFamily path(std::size_t n) { return {Kind::path, n}; }
  static GraphFamily cycle(std::size_t n) { return {Kind::cycle, n}; }
  static GraphFamily complete(std::size_t n) { return {Kind::complete, n}; }
  static GraphFamily star(std::size_t n) { return {Kind::star, n}; }
  static GraphFamily grid(std::size_t rows, std::size_t cols) { return {Kind::grid, rows, cols}; }
  static GraphFamily gnp(std::size_t n, double p, std::uint64_t seed) {
    return {Kind::gnp, n, 0, p, seed};
  }
  static GraphFamily counterexample_path(std::size_t n, std::size_t k) {
    return {Kind::counterexample_path, n, k};
  }

  std::string to_string() const;
};

// Parses "name:arg1:arg2...", e.g. "path:6", "grid:3:4", "gnp:100:0.05:42",
// "counterexample-path:7:2". The gnp seed may be omitted; default_seed is
// used then. Throws ValidationError on unknown names or bad arguments.
GraphFamily parse_family(std::string_view spec, std::uint64_t default_seed = 0);

// Throws ValidationError for invalid parameters.
//   path(n)     edges {i, i+1}
//   cycle(n)    path plus {n-1, 0}; n >= 3
//   complete(n) all pairs
//   star(n)     center 0, leaves 1..n-1
//   grid(r, c)  vertex r_i * c + c_j, 4-neighbourhood
//   gnp(n,p,s)  each pair independently with probability p, reproducible from s
//   counterexample_path(n, k)
//               path visiting 0..k-1, n-1, k..n-2 in that order; n > 2k+1
Graph generate_graph(const GraphFamily& family);

}  // namespace kconn
