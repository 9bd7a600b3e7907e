#pragma once

#include <compare>
#include <span>
#include <vector>

#include "kconn/graph.hpp"
#include "kconn/ordering.hpp"

namespace kconn {

// A vertex set in original labels, sorted ascending by rank under the order
// it was built with.
struct KSet {
  std::vector<Vertex> members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const KSet&, const KSet&) = default;
};

// The members' ranks, ascending. Comparing two keys element-wise realises
// the lexicographic order on equal-size sets.
using LexKey = std::vector<Rank>;

// Sorts by rank. Throws ContractViolation on repeats or unranked vertices.
KSet make_kset(const VertexOrder& order, std::vector<Vertex> vertices);

LexKey lex_key(const VertexOrder& order, const KSet& x);
KSet from_lex_key(const VertexOrder& order, std::span<const Rank> key);

// Throws ContractViolation if sizes differ or a member is unranked.
std::strong_ordering lex_compare(const VertexOrder& order, const KSet& x, const KSet& y);

// Members in ascending label order, the external rendering.
std::vector<Vertex> sorted_labels(const KSet& x);

// Sorted labels of every set, with the family itself sorted. Two engines
// agree iff their canonical families are equal.
std::vector<std::vector<Vertex>> canonical_family(std::span<const KSet> family);

}  // namespace kconn
