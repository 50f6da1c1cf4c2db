#pragma once

// Ordered posets and RN graphs: finite vertex sets 0..n-1 carrying a linear
// order and one (poset) or two (RN graph) forward-pointing relations.
// All types are immutable once built; the make_* factories validate every
// definitional invariant and throw oramsey::Error instead of repairing input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oramsey/error.hpp"

namespace oramsey {

using VertexId = std::uint32_t;
using Pair = std::pair<VertexId, VertexId>;

std::string format_pair(const Pair& p);

/// Irreflexive set of ordered pairs over 0..n-1, stored sorted with a CSR
/// successor index.
class Relation {
 public:
  Relation() = default;
  /// Sorts and deduplicates. Throws kInvalidInput for ids >= n and
  /// kNotIrreflexive for a loop.
  Relation(std::size_t n, std::vector<Pair> pairs);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::span<const Pair> pairs() const { return pairs_; }
  std::span<const VertexId> successors(VertexId x) const;
  bool contains(VertexId x, VertexId y) const;

  bool operator==(const Relation& other) const { return pairs_ == other.pairs_; }

 private:
  std::vector<Pair> pairs_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// A permutation of 0..n-1; position i holds the i-th smallest vertex.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws kInvalidInput unless `sequence` is a permutation of 0..n-1.
  explicit LinearOrder(std::vector<VertexId> sequence);
  static LinearOrder identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::span<const VertexId> sequence() const { return sequence_; }
  VertexId at(std::size_t position) const { return sequence_[position]; }
  std::size_t rank(VertexId v) const { return rank_[v]; }
  bool before(VertexId x, VertexId y) const { return rank_[x] < rank_[y]; }
  bool is_identity() const;

  bool operator==(const LinearOrder& other) const { return sequence_ == other.sequence_; }

 private:
  std::vector<VertexId> sequence_;
  std::vector<std::size_t> rank_;
};

/// (X, R, <=) with R a strict partial order and <= a linear extension of it.
class OrderedPoset {
 public:
  OrderedPoset() = default;

  std::size_t size() const { return order_.size(); }
  const Relation& R() const { return r_; }
  const LinearOrder& order() const { return order_; }

  bool operator==(const OrderedPoset& other) const = default;

 private:
  friend OrderedPoset make_ordered_poset(std::size_t, std::vector<Pair>, std::vector<VertexId>);
  OrderedPoset(Relation r, LinearOrder order) : r_(std::move(r)), order_(std::move(order)) {}

  Relation r_;
  LinearOrder order_;
};

/// (X, R, N, <=): R and N disjoint, every pair of either points forward.
class RNGraph {
 public:
  RNGraph() = default;

  std::size_t size() const { return order_.size(); }
  const Relation& R() const { return r_; }
  const Relation& N() const { return n_; }
  const LinearOrder& order() const { return order_; }

  bool operator==(const RNGraph& other) const = default;

 private:
  friend RNGraph make_rn_graph(std::size_t, std::vector<Pair>, std::vector<Pair>,
                               std::vector<VertexId>);
  RNGraph(Relation r, Relation n, LinearOrder order)
      : r_(std::move(r)), n_(std::move(n)), order_(std::move(order)) {}

  Relation r_;
  Relation n_;
  LinearOrder order_;
};

/// Total vertex map between two structures; validity is decided by
/// check_homomorphism in analysis.hpp.
struct Homomorphism {
  std::vector<VertexId> map;

  bool operator==(const Homomorphism& other) const = default;
};

Homomorphism identity_homomorphism(std::size_t n);
/// (outer ∘ inner)(x) = outer(inner(x)).
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

/// Errors: kNotIrreflexive, kNotTransitive, kNotLinearExtension (each names
/// the violating pair), kInvalidInput for bad ids or a non-permutation order.
OrderedPoset make_ordered_poset(std::size_t n, std::vector<Pair> r, std::vector<VertexId> order);

/// Errors: kNotDisjoint, kNotCompatible, kNotIrreflexive, kInvalidInput.
RNGraph make_rn_graph(std::size_t n, std::vector<Pair> r, std::vector<Pair> n_pairs,
                      std::vector<VertexId> order);

/// Complete expansion: same R and order, N = (<) minus R.
RNGraph poset_to_complete_rn(const OrderedPoset& poset);

/// Inverse of poset_to_complete_rn for complete graphs whose R is transitive.
OrderedPoset complete_rn_to_poset(const RNGraph& graph);

bool is_complete(const RNGraph& graph);

OrderedPoset chain(std::size_t k);
OrderedPoset antichain(std::size_t k);

std::vector<VertexId> identity_sequence(std::size_t n);

/// Copy of `graph` relabelled so that the order becomes the identity.
RNGraph relabel_to_identity_order(const RNGraph& graph);

}  // namespace oramsey
