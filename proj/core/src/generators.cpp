#include "kconn/generators.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <vector>

#include "kconn/errors.hpp"

namespace kconn {

namespace {

std::vector<std::string_view> split_colon(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find(':', start);
    parts.push_back(spec.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_count(std::string_view token, std::string_view spec) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("bad integer '" + std::string(token) + "' in generator '" +
                          std::string(spec) + "'");
  }
  return value;
}

double parse_probability(std::string_view token, std::string_view spec) {
  // from_chars for double is missing on older standard libraries.
  std::istringstream in{std::string(token)};
  double value = 0;
  if (!(in >> value) || !in.eof()) {
    throw ValidationError("bad probability '" + std::string(token) + "' in generator '" +
                          std::string(spec) + "'");
  }
  return value;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

}  // namespace

std::string GraphFamily::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::path: out << "path:" << n; break;
    case Kind::cycle: out << "cycle:" << n; break;
    case Kind::complete: out << "complete:" << n; break;
    case Kind::star: out << "star:" << n; break;
    case Kind::grid: out << "grid:" << n << ':' << m; break;
    case Kind::gnp: out << "gnp:" << n << ':' << p << ':' << seed; break;
    case Kind::counterexample_path: out << "counterexample-path:" << n << ':' << m; break;
  }
  return out.str();
}

GraphFamily parse_family(std::string_view spec, std::uint64_t default_seed) {
  const auto parts = split_colon(spec);
  std::string name(parts.front());
  for (char& c : name) {
    if (c == '_') c = '-';
  }
  const std::size_t args = parts.size() - 1;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(args >= lo && args <= hi, "wrong argument count in generator '" + std::string(spec) + "'");
  };
  auto count = [&](std::size_t i) { return parse_count(parts[i], spec); };

  if (name == "path") {
    arity(1, 1);
    return GraphFamily::path(count(1));
  }
  if (name == "cycle") {
    arity(1, 1);
    return GraphFamily::cycle(count(1));
  }
  if (name == "complete") {
    arity(1, 1);
    return GraphFamily::complete(count(1));
  }
  if (name == "star") {
    arity(1, 1);
    return GraphFamily::star(count(1));
  }
  if (name == "grid") {
    arity(2, 2);
    return GraphFamily::grid(count(1), count(2));
  }
  if (name == "gnp") {
    arity(2, 3);
    const std::uint64_t seed = args == 3 ? count(3) : default_seed;
    return GraphFamily::gnp(count(1), parse_probability(parts[2], spec), seed);
  }
  if (name == "counterexample-path") {
    arity(2, 2);
    return GraphFamily::counterexample_path(count(1), count(2));
  }
  throw ValidationError("unknown generator '" + std::string(parts.front()) + "'");
}

Graph generate_graph(const GraphFamily& family) {
  const std::size_t n = family.n;
  std::vector<Edge> edges;
  auto vertex = [](std::size_t i) { return static_cast<Vertex>(i); };

  switch (family.kind) {
    case GraphFamily::Kind::path:
      require(n >= 1, "path needs n >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(vertex(i), vertex(i + 1));
      return Graph::from_edges(n, edges);

    case GraphFamily::Kind::cycle:
      require(n >= 3, "cycle needs n >= 3");
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vertex(i), vertex((i + 1) % n));
      return Graph::from_edges(n, edges);

    case GraphFamily::Kind::complete:
      require(n >= 1, "complete graph needs n >= 1");
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(vertex(i), vertex(j));
      }
      return Graph::from_edges(n, edges);

    case GraphFamily::Kind::star:
      require(n >= 1, "star needs n >= 1");
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, vertex(i));
      return Graph::from_edges(n, edges);

    case GraphFamily::Kind::grid: {
      const std::size_t rows = family.n;
      const std::size_t cols = family.m;
      require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const std::size_t id = r * cols + c;
          if (c + 1 < cols) edges.emplace_back(vertex(id), vertex(id + 1));
          if (r + 1 < rows) edges.emplace_back(vertex(id), vertex(id + cols));
        }
      }
      return Graph::from_edges(rows * cols, edges);
    }

    case GraphFamily::Kind::gnp: {
      require(n >= 1, "gnp needs n >= 1");
      require(family.p >= 0.0 && family.p <= 1.0, "gnp needs p in [0, 1]");
      // Raw engine output keeps the stream identical across standard libraries;
      // distribution objects are implementation-defined.
      std::mt19937_64 rng(family.seed);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          if (draw < family.p) edges.emplace_back(vertex(i), vertex(j));
        }
      }
      return Graph::from_edges(n, edges);
    }

    case GraphFamily::Kind::counterexample_path: {
      const std::size_t k = family.m;
      require(k >= 1, "counterexample-path needs k >= 1");
      require(n > 2 * k + 1, "counterexample-path needs n > 2k+1");
      std::vector<Vertex> order;
      for (std::size_t i = 0; i < k; ++i) order.push_back(vertex(i));
      order.push_back(vertex(n - 1));
      for (std::size_t i = k; i + 1 < n; ++i) order.push_back(vertex(i));
      for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.emplace_back(order[i], order[i + 1]);
      return Graph::from_edges(n, edges);
    }
  }
  throw ValidationError("unknown graph family");
}

}  // namespace kconn
