#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "oramsey/structures.hpp"

namespace oramsey {

/// x_1..x_j with (x_i, x_{i+1}) in R and (x_1, x_j) in N.
struct QuasicyclePath {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const QuasicyclePath& other) const = default;
};

/// Shortest bad quasicycle with at most `max_len` vertices (unbounded when
/// empty). Among shortest ones the lexicographically least vertex sequence
/// is returned.
std::optional<QuasicyclePath> find_bad_quasicycle(const RNGraph& graph,
                                                  std::optional<std::size_t> max_len = std::nullopt);

/// No bad quasicycle of length 2..ell.
bool is_ell_rn(const RNGraph& graph, std::size_t ell);

/// Largest ell with is_ell_rn(graph, ell), or nullopt when the graph is good.
std::optional<std::size_t> max_ell_rn(const RNGraph& graph);

/// Transitive closure of R disjoint from N.
bool is_good(const RNGraph& graph);

/// Throws kCycleDetected when the closure would contain a loop.
Relation transitive_closure(const Relation& rel, std::size_t n);

/// Number of vertices on a longest directed R-path (1 for an edgeless,
/// non-empty graph, 0 for the empty graph).
std::size_t longest_r_path_vertices(const RNGraph& graph);

/// R and N edges map forward into R and N respectively.
bool check_homomorphism(const Homomorphism& h, const RNGraph& source, const RNGraph& target);

/// x <= y in source implies h(x) <= h(y) in target.
bool is_weakly_monotone(const Homomorphism& h, const RNGraph& source, const RNGraph& target);

}  // namespace oramsey
