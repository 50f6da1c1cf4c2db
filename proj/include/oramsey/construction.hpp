#pragma once

// The partite construction. Starting from disjoint copies of B placed over
// their images in D, each step picks the next copy of A in D, takes the
// partite witness F for the subgraph sitting over that copy, and glues one
// copy of the current picture onto every lifted copy of that subgraph in F.
// Repeating over the tower C_2, C_3, ... and closing R transitively at the
// end gives an ordered poset C with C -> (B)^A_2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oramsey/arrow.hpp"
#include "oramsey/partite.hpp"
#include "oramsey/structures.hpp"

namespace oramsey {

/// Where a picture vertex came from: for the initial picture the copy of B
/// and the B vertex; later, the glued copy index and the previous picture
/// vertex, or kShared with the vertex of F it was taken from.
struct VertexOrigin {
  static constexpr std::int64_t kShared = -1;
  std::int64_t copy = 0;
  VertexId source = 0;

  bool operator==(const VertexOrigin& other) const = default;
};

/// A D-partite RN graph with its part collapse f onto D. D is identity
/// ordered; part i lies over D vertex i. The base graph is identity ordered
/// and its parts are consecutive.
struct Picture {
  RNGraph base;
  RNGraph d;
  std::vector<std::vector<VertexId>> parts;
  Homomorphism f;
  std::vector<VertexOrigin> origin;
};

/// Validates the part layout and that f is the part collapse and a
/// homomorphism. Throws kInvalidInput or kPartOrderViolation.
Picture make_picture(RNGraph base, RNGraph d, Homomorphism f);

/// Errors: kNoCopiesOfB.
Picture build_picture_zero(const RNGraph& d, const RNGraph& b);

struct Subsystem {
  APartiteRNGraph e;
  /// Vertex of e -> vertex of the picture.
  std::vector<VertexId> to_picture;
};

/// The A-partite subgraph of the picture over the parts of `a_copy`.
Subsystem induced_subsystem(const Picture& p, const RNGraph& a, const Copy& a_copy);

struct AmalgamationResult {
  Picture picture;
  /// glue_maps[k]: previous picture -> new picture along lift k.
  std::vector<std::vector<VertexId>> glue_maps;
  std::size_t shared_vertices = 0;
  std::size_t fresh_vertices = 0;
};

/// Glues one copy of `p` onto each of `lifts` (copies of sub.e in f).
/// Throws kGlueConflict or kInvariantViolation when a glued copy is not an
/// induced copy of p, and kResourceExceeded above `max_vertices`.
AmalgamationResult amalgamate(const Picture& p, const Subsystem& sub, const APartiteRNGraph& f,
                              const std::vector<Copy>& lifts, std::size_t max_vertices,
                              bool verify_copies = true);

struct ConstructionOptions {
  BaseOracle oracle;
  ProductRule rule = ProductRule::kNFromFbarN;
  std::size_t max_vertices = 100'000;
  bool verify_copies = true;
};

struct StepReport {
  std::size_t step = 0;
  std::vector<VertexId> a_copy;
  std::size_t e_vertices = 0;
  std::size_t fbar_vertices = 0;
  std::size_t lifts = 0;
  std::size_t shared = 0;
  std::size_t fresh = 0;
  std::size_t vertices = 0;
  std::size_t r_edges = 0;
  std::size_t n_edges = 0;
  Certification certification = Certification::kCertified;
  std::uint64_t oracle_candidates = 0;
  bool ell_rn = true;
};

struct ConstructionResult {
  Picture picture;
  std::vector<StepReport> steps;
  Certification certification = Certification::kCertified;
};

/// P_0 and one amalgamation per copy of A in D. When `ell` is set every
/// picture is checked to be ell-RN (kInvariantViolation otherwise). Steps
/// completed before an error are appended to `progress` when given.
ConstructionResult run_partite_construction(const RNGraph& d, const RNGraph& a, const RNGraph& b,
                                            const ConstructionOptions& options,
                                            std::optional<std::size_t> ell = std::nullopt,
                                            std::vector<StepReport>* progress = nullptr);

// ---------------------------------------------------------------------------

struct TowerStage {
  std::size_t ell = 2;
  RNGraph c;
  /// C_ell -> C_{ell-1}; empty for the first stage.
  Homomorphism h_down;
  /// C_ell -> C_2.
  Homomorphism h_star;
  Certification certification = Certification::kCertified;
  /// True when C_{ell-1} was already good and is reused unchanged.
  bool reused = false;
  std::vector<StepReport> steps;
};

struct TowerTruncation {
  std::size_t ell = 0;
  ErrorCode code = ErrorCode::kInvariantViolation;
  std::string message;
  std::vector<StepReport> steps;
};

struct Tower {
  RNGraph a;
  RNGraph b;
  std::vector<TowerStage> stages;
  std::optional<TowerTruncation> truncation;

  std::size_t lambda() const { return stages.empty() ? 0 : stages.front().c.size(); }
  std::size_t reached() const { return stages.empty() ? 0 : stages.back().ell; }
  Certification certification() const;
};

struct TowerOptions {
  BaseOracle c2_oracle;
  ConstructionOptions construction;
  /// A stage that is already good satisfies every later stage's conditions.
  bool reuse_stable_stages = true;
};

/// C_2 from the oracle, then C_ell from C_{ell-1} up to `ell_max`. Errors
/// after C_2 end the tower early and are recorded in `truncation`.
Tower build_tower(const RNGraph& a, const RNGraph& b, std::size_t ell_max, const TowerOptions& options);
Tower build_tower(const OrderedPoset& a, const OrderedPoset& b, std::size_t ell_max,
                  const TowerOptions& options);

struct FinishResult {
  OrderedPoset poset;
  std::size_t lambda = 0;
  std::size_t longest_path = 0;
  std::size_t closure_added = 0;
  std::size_t b_copies = 0;
  std::size_t b_copies_intact = 0;
  std::size_t b_copies_after = 0;
};

/// Closes R of C_lambda transitively. Errors: kTowerTooShort,
/// kClosureIntersectsN, kInvariantViolation (path bound or broken copy).
FinishResult finish(const Tower& tower);

/// First copy of B whose copies of A all share one colour. Errors: kNoneFound.
Copy extract_monochromatic_b(const RNGraph& host, const Coloring& coloring, const RNGraph& b,
                             const RNGraph& a);
Copy extract_monochromatic_b(const Picture& p, const Coloring& coloring, const RNGraph& b,
                             const RNGraph& a);

}  // namespace oramsey
