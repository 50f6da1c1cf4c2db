#pragma once

// A-partite RN graphs and the product construction for the partite lemma.
//
// A is a complete, good RN graph with vertices v_0 < ... < v_{p-1}. Part i
// of an A-partite graph lies over v_i; parts are consecutive in the order,
// carry no internal edges, and every edge between parts i < j has the type
// (R or N) of the pair (v_i, v_j) in A.

#include <cstddef>
#include <string_view>
#include <vector>

#include "oramsey/arrow.hpp"
#include "oramsey/embeddings.hpp"
#include "oramsey/structures.hpp"

namespace oramsey {

class APartiteRNGraph {
 public:
  APartiteRNGraph() = default;

  const RNGraph& base() const { return base_; }
  const RNGraph& A() const { return a_; }
  std::size_t part_count() const { return parts_.size(); }
  /// Part i (over the i-th vertex of A in A's order), ascending in base order.
  const std::vector<VertexId>& part(std::size_t i) const { return parts_[i]; }
  const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
  std::size_t part_of(VertexId v) const { return part_of_[v]; }

  bool operator==(const APartiteRNGraph& other) const = default;

 private:
  friend APartiteRNGraph make_apartite(const RNGraph&, std::vector<std::vector<VertexId>>,
                                       const RNGraph&);

  RNGraph base_;
  RNGraph a_;
  std::vector<std::vector<VertexId>> parts_;
  std::vector<std::size_t> part_of_;
};

/// Errors: kInvalidInput (A not complete or not good, parts not a
/// partition), kIntraPartEdge, kPartProjectionViolation, kPartOrderViolation.
APartiteRNGraph make_apartite(const RNGraph& a, std::vector<std::vector<VertexId>> parts,
                              const RNGraph& base);
APartiteRNGraph make_apartite(const RNGraph& a, std::vector<std::vector<VertexId>> parts,
                              std::size_t n, std::vector<Pair> r, std::vector<Pair> n_pairs,
                              std::vector<VertexId> order);

/// Sends part i to the i-th vertex of A.
Homomorphism projection(const APartiteRNGraph& e);

/// Copies of A in the base graph; throws kInvariantViolation if one of them
/// misses a part or meets it twice.
std::vector<Copy> crossing_copies(const APartiteRNGraph& e);

/// Embeddings of e.base() into f.base() mapping part i into part i.
std::vector<Copy> partite_embeddings(const APartiteRNGraph& e, const APartiteRNGraph& f);

// ---------------------------------------------------------------------------

/// Which relation of F̄ feeds the N edges of the product.
enum class ProductRule {
  kNFromFbarN,  // N(F) pairs N(A) with N(F̄)
  kVerbatim,    // N(F) pairs N(A) with R(F̄)
};

std::string_view to_string(ProductRule rule);

/// Maps between copies in F̄ and copies in the product F. Product vertex
/// (i, u) has id i * |F̄| + rank(u), so the identity order on F is the
/// lexicographic order.
class LiftCorrespondence {
 public:
  LiftCorrespondence() = default;
  LiftCorrespondence(RNGraph a, RNGraph fbar, std::vector<std::size_t> e_part_of);

  VertexId product_vertex(std::size_t part, VertexId fbar_vertex) const;
  std::size_t part_of(VertexId product_vertex) const;
  VertexId fbar_vertex(VertexId product_vertex) const;

  /// Diagonal copy {(v_i, x_i)} of a copy x_0 < ... < x_{p-1} of A in F̄.
  Copy lift_a(const Copy& a_in_fbar) const;
  /// Part-respecting copy {(v_i, x) : x in part i of E'} of a copy E' of E in F̄.
  Copy lift_e(const Copy& e_in_fbar) const;
  /// Inverse of lift_a; none when `a_in_f` is not crossing or its shadow in
  /// F̄ is not a copy of A.
  std::optional<Copy> project(const Copy& a_in_f) const;
  /// Colours each copy of A in F̄ like its diagonal lift.
  Coloring transfer_coloring(const Coloring& on_f, const std::vector<Copy>& a_in_fbar) const;

 private:
  RNGraph a_;
  RNGraph fbar_;
  std::vector<std::size_t> e_part_of_;
};

APartiteRNGraph build_product(const RNGraph& a, const RNGraph& fbar,
                              ProductRule rule = ProductRule::kNFromFbarN);

struct ProductResult {
  APartiteRNGraph f;
  RNGraph fbar;
  Certification certification = Certification::kCertified;
  std::uint64_t candidates_examined = 0;
  LiftCorrespondence lifts;

  /// Lifts of every copy of E in F̄, in image order of F̄.
  std::vector<Copy> lifted_copies(const APartiteRNGraph& e) const;
};

/// F̄ from the oracle for (A, E as a plain RN graph), then the product.
ProductResult product_construction(const RNGraph& a, const APartiteRNGraph& e,
                                   const BaseOracle& oracle,
                                   ProductRule rule = ProductRule::kNFromFbarN);

/// Part-respecting arrow F -> (E)^A_r: colour the crossing copies of A in
/// F, look for a lifted copy of E with all its A-copies in one colour.
ArrowVerdict check_partite_arrow(const APartiteRNGraph& f, const APartiteRNGraph& e, int num_colors,
                                 const SearchLimits& limits = {});

}  // namespace oramsey
