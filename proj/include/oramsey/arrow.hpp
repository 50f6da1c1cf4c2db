#pragma once

// Partition arrows target -> (Q)^P_r: every r-colouring of the copies of P
// in `target` leaves some copy of Q whose P-copies all share one colour.
//
// The decision procedure reduces to hypergraph colouring. Vertices are the
// copies of P in the target; each copy of Q contributes the hyperedge of
// P-copies it contains. The arrow holds iff that hypergraph has no
// r-colouring without a monochromatic hyperedge. The search is exact
// backtracking with unit propagation, after a seeded random pre-pass that
// only ever refutes.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oramsey/embeddings.hpp"
#include "oramsey/structures.hpp"

namespace oramsey {

enum class Certification {
  kCertified,    // arrow property checked exactly
  kConditional,  // check skipped after ResourceExceeded
  kAssumed,      // witness accepted without a check
};

std::string_view to_string(Certification c);
/// Weakest of the two tags.
Certification combine(Certification a, Certification b);

struct SearchLimits {
  std::uint64_t max_nodes = 20'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
  std::size_t sample_prepass = 32;
  std::uint64_t seed = 0x5eedULL;
};

/// Colour per copy image. Images are kept in the order of the arrow
/// instance they were produced for (lexicographic by image set).
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<std::vector<VertexId>> images, std::vector<int> colors, int num_colors);

  std::size_t size() const { return colors_.size(); }
  int num_colors() const { return num_colors_; }
  const std::vector<std::vector<VertexId>>& images() const { return images_; }
  const std::vector<int>& colors() const { return colors_; }
  std::optional<int> color_of(const std::vector<VertexId>& image) const;

  bool operator==(const Coloring& other) const = default;

 private:
  std::vector<std::vector<VertexId>> images_;
  std::vector<int> colors_;
  int num_colors_ = 2;
};

/// The colouring hypergraph of one arrow question.
class ArrowInstance {
 public:
  /// Copies of `p` in `target` and, for every copy of `q` in `target`, the
  /// indices of the P-copies inside it.
  ArrowInstance(const RNGraph& target, const RNGraph& q, const RNGraph& p);
  /// Explicit variant: `q_copies[i]` covers `members[i]` (indices into
  /// `p_copies`). Used for part-respecting arrows.
  ArrowInstance(std::vector<Copy> p_copies, std::vector<Copy> q_copies,
                std::vector<std::vector<std::size_t>> members);

  const std::vector<Copy>& p_copies() const { return p_copies_; }
  const std::vector<Copy>& q_copies() const { return q_copies_; }
  const std::vector<std::vector<std::size_t>>& members() const { return members_; }

  std::optional<std::size_t> index_of(const std::vector<VertexId>& image) const;
  /// Index of the first Q-copy whose P-copies are monochromatic.
  std::optional<std::size_t> first_monochromatic(std::span<const int> colors) const;

  /// Aligns `coloring` with this instance; throws kInvalidInput when an
  /// image is missing.
  std::vector<int> colors_for(const Coloring& coloring) const;
  Coloring make_coloring(std::vector<int> colors, int num_colors) const;

 private:
  void index_images();

  std::vector<Copy> p_copies_;
  std::vector<Copy> q_copies_;
  std::vector<std::vector<std::size_t>> members_;
  std::map<std::vector<VertexId>, std::size_t> by_image_;
};

/// r-colouring of 0..m-1 with no monochromatic hyperedge, or nullopt when
/// none exists. Throws kResourceExceeded past the node or time limit.
std::optional<std::vector<int>> find_proper_coloring(
    std::size_t m, const std::vector<std::vector<std::size_t>>& hyperedges, int num_colors,
    const SearchLimits& limits, std::uint64_t* nodes_used = nullptr);

struct ArrowVerdict {
  bool holds = false;
  std::optional<Coloring> counterexample;
  std::uint64_t nodes = 0;
  std::shared_ptr<const ArrowInstance> instance;

  /// For holds == true: the copy of Q made monochromatic by `coloring`.
  std::optional<Copy> witness(const Coloring& coloring) const;
};

ArrowVerdict check_arrow(const RNGraph& target, const RNGraph& q, const RNGraph& p, int num_colors,
                         const SearchLimits& limits = {});
ArrowVerdict check_arrow(const OrderedPoset& target, const OrderedPoset& q, const OrderedPoset& p,
                         int num_colors, const SearchLimits& limits = {});
ArrowVerdict check_arrow(std::shared_ptr<const ArrowInstance> instance, int num_colors,
                         const SearchLimits& limits = {});

std::optional<Copy> find_monochromatic(const RNGraph& target, const Coloring& coloring,
                                       const RNGraph& q, const RNGraph& p);
std::optional<Copy> find_monochromatic(const OrderedPoset& target, const Coloring& coloring,
                                       const OrderedPoset& q, const OrderedPoset& p);

// ---------------------------------------------------------------------------
// Base Ramsey oracle. Produces F̄ with F̄ -> (E)^A_2 for the partite lemma
// and for the first tower stage.

enum class OracleMode { kSearch, kFile, kAssume };

std::string_view to_string(OracleMode mode);

struct BaseOracle {
  OracleMode mode = OracleMode::kSearch;
  /// Largest candidate vertex count tried in search mode.
  std::size_t size_bound = 12;
  /// Candidates examined before search mode gives up.
  std::uint64_t max_candidates = 5'000'000;
  SearchLimits limits;
  /// Witness for file and assume modes.
  std::optional<RNGraph> supplied;
};

struct OracleWitness {
  RNGraph graph;
  Certification certification = Certification::kCertified;
  std::uint64_t candidates_examined = 0;
};

/// Errors: kNotFoundWithinBounds (search), kCertificationFailed (file mode
/// witness refuted), kInvalidInput (missing supplied witness).
OracleWitness oracle_ramsey(const BaseOracle& oracle, const RNGraph& a, const RNGraph& e);

}  // namespace oramsey
