#pragma once

// Copies of one ordered structure inside another. Because both structures
// are linearly ordered and embeddings preserve the order both ways, an
// embedding is determined by its image set; copies and images coincide.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oramsey/structures.hpp"

namespace oramsey {

struct Copy {
  /// map[v] is the image of source vertex v.
  std::vector<VertexId> map;
  /// Sorted image vertex ids.
  std::vector<VertexId> image;

  bool operator==(const Copy& other) const = default;
};

/// Returns false from the visitor to stop the enumeration early.
using CopyVisitor = std::function<bool(const Copy&)>;

/// Optional per-source-vertex restriction of the admissible targets.
using CandidateFilter = std::function<bool(VertexId source, VertexId target)>;

/// Visits copies in increasing lexicographic order of the image positions
/// in the target order (which is image-set order when the target order is
/// the identity).
void for_each_copy(const RNGraph& pattern, const RNGraph& host, const CopyVisitor& visit,
                   const CandidateFilter& filter = {});

/// All copies, each once, sorted lexicographically by image set.
std::vector<Copy> enumerate_copies(const RNGraph& pattern, const RNGraph& host);
std::vector<Copy> enumerate_copies(const OrderedPoset& pattern, const OrderedPoset& host);

std::size_t count_copies(const RNGraph& pattern, const RNGraph& host);

/// Injective, order-preserving both ways, and R/N membership reflected both
/// ways.
bool is_embedding(std::span<const VertexId> map, const RNGraph& pattern, const RNGraph& host);
bool is_embedding(std::span<const VertexId> map, const OrderedPoset& pattern,
                  const OrderedPoset& host);

/// Substructure of `host` induced on `vertices`, renumbered by host order.
/// `vertices` need not be sorted; the returned vector maps new ids to host ids.
RNGraph induced_subgraph(const RNGraph& host, std::span<const VertexId> vertices,
                         std::vector<VertexId>* new_to_host = nullptr);

}  // namespace oramsey
