#include "kconn/kset.hpp"

#include <algorithm>
#include <string>

#include "kconn/errors.hpp"

namespace kconn {

KSet make_kset(const VertexOrder& order, std::vector<Vertex> vertices) {
  for (Vertex v : vertices) {
    if (!order.contains(v)) {
      throw ContractViolation("vertex " + std::to_string(v) + " is not ranked by the order");
    }
  }
  std::sort(vertices.begin(), vertices.end(),
            [&](Vertex a, Vertex b) { return order.rank(a) < order.rank(b); });
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ContractViolation("repeated vertex in set");
  }
  return KSet{std::move(vertices)};
}

LexKey lex_key(const VertexOrder& order, const KSet& x) {
  LexKey key;
  key.reserve(x.size());
  for (Vertex v : x.members) {
    if (!order.contains(v)) {
      throw ContractViolation("vertex " + std::to_string(v) + " is not ranked by the order");
    }
    key.push_back(order.rank(v));
  }
  std::sort(key.begin(), key.end());
  return key;
}

KSet from_lex_key(const VertexOrder& order, std::span<const Rank> key) {
  KSet x;
  x.members.reserve(key.size());
  for (Rank r : key) x.members.push_back(order.vertex_at(r));
  return x;
}

std::strong_ordering lex_compare(const VertexOrder& order, const KSet& x, const KSet& y) {
  if (x.size() != y.size()) throw ContractViolation("lex_compare: sets differ in size");
  const auto kx = lex_key(order, x);
  const auto ky = lex_key(order, y);
  return std::lexicographical_compare_three_way(kx.begin(), kx.end(), ky.begin(), ky.end());
}

std::vector<Vertex> sorted_labels(const KSet& x) {
  std::vector<Vertex> out = x.members;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> canonical_family(std::span<const KSet> family) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(family.size());
  for (const auto& x : family) out.push_back(sorted_labels(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kconn
