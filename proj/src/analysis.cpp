#include "oramsey/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <queue>

namespace oramsey {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Row-per-vertex reachability bitsets.
class ReachMatrix {
 public:
  explicit ReachMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t x, std::size_t y) { bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  bool test(std::size_t x, std::size_t y) const {
    return (bits_[x * words_ + y / 64] >> (y % 64)) & 1U;
  }
  void merge_row(std::size_t into, std::size_t from) {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[into * words_ + w] |= bits_[from * words_ + w];
    }
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// `topo` lists vertices so that every pair of `rel` points forward.
ReachMatrix closure_along(const Relation& rel, std::span<const VertexId> topo) {
  ReachMatrix reach(topo.size());
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexId x = *it;
    for (VertexId s : rel.successors(x)) {
      reach.set(x, s);
      reach.merge_row(x, s);
    }
  }
  return reach;
}

std::vector<std::vector<VertexId>> predecessors(const Relation& rel, std::size_t n) {
  std::vector<std::vector<VertexId>> preds(n);
  for (const Pair& p : rel.pairs()) {
    preds[p.second].push_back(p.first);
  }
  return preds;
}

// BFS distances (in edges) from `source` along R, cut at `max_depth` edges.
std::vector<std::size_t> forward_distances(const Relation& r, std::size_t n, VertexId source,
                                           std::size_t max_depth) {
  std::vector<std::size_t> dist(n, kUnreached);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (dist[v] >= max_depth) {
      continue;
    }
    for (VertexId s : r.successors(v)) {
      if (dist[s] == kUnreached) {
        dist[s] = dist[v] + 1;
        queue.push_back(s);
      }
    }
  }
  return dist;
}

// Lexicographically least shortest R-path from x to y.
std::vector<VertexId> least_shortest_path(const Relation& r,
                                          const std::vector<std::vector<VertexId>>& preds,
                                          VertexId x, VertexId y) {
  const std::size_t n = preds.size();
  std::vector<std::size_t> to_y(n, kUnreached);
  std::deque<VertexId> queue{y};
  to_y[y] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId p : preds[v]) {
      if (to_y[p] == kUnreached) {
        to_y[p] = to_y[v] + 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<VertexId> path{x};
  VertexId cur = x;
  while (cur != y) {
    for (VertexId s : r.successors(cur)) {
      if (to_y[s] + 1 == to_y[cur]) {
        cur = s;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace

std::optional<QuasicyclePath> find_bad_quasicycle(const RNGraph& graph,
                                                  std::optional<std::size_t> max_len) {
  const std::size_t n = graph.size();
  const std::size_t limit = max_len.value_or(n);
  if (limit < 3 || graph.N().empty()) {
    return std::nullopt;  // length 2 would need a pair in R and N
  }
  std::size_t best_len = kUnreached;
  VertexId best_source = 0;
  std::vector<VertexId> best_targets;
  std::vector<VertexId> sources;
  for (const Pair& p : graph.N().pairs()) {
    if (sources.empty() || sources.back() != p.first) {
      sources.push_back(p.first);
    }
  }
  for (VertexId x : sources) {
    const std::size_t depth = std::min(limit, best_len) - 1;
    const auto dist = forward_distances(graph.R(), n, x, depth);
    for (VertexId y : graph.N().successors(x)) {
      if (dist[y] == kUnreached) {
        continue;
      }
      const std::size_t len = dist[y] + 1;
      if (len < best_len) {
        best_len = len;
        best_source = x;
        best_targets = {y};
      } else if (len == best_len && x == best_source) {
        best_targets.push_back(y);
      }
    }
  }
  if (best_len == kUnreached) {
    return std::nullopt;
  }
  const auto preds = predecessors(graph.R(), n);
  std::vector<VertexId> best;
  for (VertexId y : best_targets) {
    auto path = least_shortest_path(graph.R(), preds, best_source, y);
    if (best.empty() || path < best) {
      best = std::move(path);
    }
  }
  return QuasicyclePath{std::move(best)};
}

bool is_ell_rn(const RNGraph& graph, std::size_t ell) {
  if (ell < 2) {
    throw Error(ErrorCode::kInvalidInput, "ell must be at least 2");
  }
  return !find_bad_quasicycle(graph, ell).has_value();
}

std::optional<std::size_t> max_ell_rn(const RNGraph& graph) {
  auto q = find_bad_quasicycle(graph);
  if (!q) {
    return std::nullopt;
  }
  return q->length() - 1;
}

bool is_good(const RNGraph& graph) {
  if (graph.N().empty()) {
    return true;
  }
  const ReachMatrix reach = closure_along(graph.R(), graph.order().sequence());
  for (const Pair& p : graph.N().pairs()) {
    if (reach.test(p.first, p.second)) {
      return false;
    }
  }
  return true;
}

Relation transitive_closure(const Relation& rel, std::size_t n) {
  // Kahn's algorithm; ties broken by smallest id for a deterministic order.
  std::vector<std::size_t> in_degree(n, 0);
  for (const Pair& p : rel.pairs()) {
    ++in_degree[p.second];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (in_degree[v] == 0) {
      ready.push(v);
    }
  }
  std::vector<VertexId> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    topo.push_back(v);
    for (VertexId s : rel.successors(v)) {
      if (--in_degree[s] == 0) {
        ready.push(s);
      }
    }
  }
  if (topo.size() != n) {
    for (VertexId v = 0; v < n; ++v) {
      if (in_degree[v] != 0) {
        throw Error(ErrorCode::kCycleDetected, "vertex " + std::to_string(v) + " lies on a cycle");
      }
    }
  }
  const ReachMatrix reach = closure_along(rel, topo);
  std::vector<Pair> pairs;
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = 0; y < n; ++y) {
      if (reach.test(x, y)) {
        pairs.emplace_back(x, y);
      }
    }
  }
  return Relation(n, std::move(pairs));
}

std::size_t longest_r_path_vertices(const RNGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> len(n, 1);
  std::size_t best = 0;
  for (std::size_t pos = n; pos-- > 0;) {
    const VertexId x = graph.order().at(pos);
    for (VertexId s : graph.R().successors(x)) {
      len[x] = std::max(len[x], len[s] + 1);
    }
    best = std::max(best, len[x]);
  }
  return best;
}

bool check_homomorphism(const Homomorphism& h, const RNGraph& source, const RNGraph& target) {
  if (h.map.size() != source.size()) {
    return false;
  }
  for (VertexId v : h.map) {
    if (v >= target.size()) {
      return false;
    }
  }
  for (const Pair& p : source.R().pairs()) {
    if (!target.R().contains(h.map[p.first], h.map[p.second])) {
      return false;
    }
  }
  for (const Pair& p : source.N().pairs()) {
    if (!target.N().contains(h.map[p.first], h.map[p.second])) {
      return false;
    }
  }
  return true;
}

bool is_weakly_monotone(const Homomorphism& h, const RNGraph& source, const RNGraph& target) {
  if (h.map.size() != source.size()) {
    return false;
  }
  std::size_t last = 0;
  for (std::size_t pos = 0; pos < source.size(); ++pos) {
    const VertexId img = h.map[source.order().at(pos)];
    if (img >= target.size()) {
      return false;
    }
    const std::size_t rank = target.order().rank(img);
    if (rank < last) {
      return false;
    }
    last = rank;
  }
  return true;
}

}  // namespace oramsey
