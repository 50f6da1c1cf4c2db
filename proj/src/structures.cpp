#include "oramsey/structures.hpp"

#include <algorithm>
#include <numeric>

namespace oramsey {

std::string format_pair(const Pair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

Relation::Relation(std::size_t n, std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const Pair& p : pairs_) {
    if (p.first >= n || p.second >= n) {
      throw Error(ErrorCode::kInvalidInput,
                  "pair " + format_pair(p) + " out of range for n=" + std::to_string(n));
    }
    if (p.first == p.second) {
      throw Error(ErrorCode::kNotIrreflexive, "loop " + format_pair(p));
    }
  }
  offsets_.assign(n + 1, 0);
  for (const Pair& p : pairs_) {
    ++offsets_[p.first + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.reserve(pairs_.size());
  for (const Pair& p : pairs_) {
    targets_.push_back(p.second);
  }
}

std::span<const VertexId> Relation::successors(VertexId x) const {
  if (x + 1 >= offsets_.size()) {
    return {};
  }
  return std::span<const VertexId>(targets_).subspan(offsets_[x], offsets_[x + 1] - offsets_[x]);
}

bool Relation::contains(VertexId x, VertexId y) const {
  auto succ = successors(x);
  return std::binary_search(succ.begin(), succ.end(), y);
}

LinearOrder::LinearOrder(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
  const std::size_t n = sequence_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  rank_.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = sequence_[i];
    if (v >= n) {
      throw Error(ErrorCode::kInvalidInput, "order entry " + std::to_string(v) + " out of range");
    }
    if (rank_[v] != kUnset) {
      throw Error(ErrorCode::kInvalidInput, "order lists vertex " + std::to_string(v) + " twice");
    }
    rank_[v] = i;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) { return LinearOrder(identity_sequence(n)); }

bool LinearOrder::is_identity() const {
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (sequence_[i] != i) {
      return false;
    }
  }
  return true;
}

std::vector<VertexId> identity_sequence(std::size_t n) {
  std::vector<VertexId> seq(n);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return seq;
}

Homomorphism identity_homomorphism(std::size_t n) { return Homomorphism{identity_sequence(n)}; }

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  Homomorphism out;
  out.map.reserve(inner.map.size());
  for (VertexId v : inner.map) {
    if (v >= outer.map.size()) {
      throw Error(ErrorCode::kInvalidInput, "composition: inner image " + std::to_string(v) +
                                                " outside the outer map's domain");
    }
    out.map.push_back(outer.map[v]);
  }
  return out;
}

OrderedPoset make_ordered_poset(std::size_t n, std::vector<Pair> r, std::vector<VertexId> order) {
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidInput, "order has " + std::to_string(order.size()) +
                                              " entries, expected " + std::to_string(n));
  }
  Relation rel(n, std::move(r));
  LinearOrder lin(std::move(order));
  for (const Pair& p : rel.pairs()) {
    if (!lin.before(p.first, p.second)) {
      throw Error(ErrorCode::kNotLinearExtension, "pair " + format_pair(p) + " runs against the order");
    }
  }
  // Transitivity: for x->y->z require x->z. Lexicographic scan makes the
  // reported pair the smallest missing one for a given x.
  for (const Pair& p : rel.pairs()) {
    for (VertexId z : rel.successors(p.second)) {
      if (!rel.contains(p.first, z)) {
        throw Error(ErrorCode::kNotTransitive,
                    format_pair({p.first, z}) + " missing (via " + std::to_string(p.second) + ")");
      }
    }
  }
  return OrderedPoset(std::move(rel), std::move(lin));
}

RNGraph make_rn_graph(std::size_t n, std::vector<Pair> r, std::vector<Pair> n_pairs,
                      std::vector<VertexId> order) {
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidInput, "order has " + std::to_string(order.size()) +
                                              " entries, expected " + std::to_string(n));
  }
  Relation rel_r(n, std::move(r));
  Relation rel_n(n, std::move(n_pairs));
  LinearOrder lin(std::move(order));
  for (const Pair& p : rel_r.pairs()) {
    if (rel_n.contains(p.first, p.second)) {
      throw Error(ErrorCode::kNotDisjoint, "pair " + format_pair(p) + " lies in both R and N");
    }
  }
  for (const Relation* rel : {&rel_r, &rel_n}) {
    for (const Pair& p : rel->pairs()) {
      if (!lin.before(p.first, p.second)) {
        throw Error(ErrorCode::kNotCompatible, std::string(rel == &rel_r ? "R" : "N") + " pair " +
                                                   format_pair(p) + " runs against the order");
      }
    }
  }
  return RNGraph(std::move(rel_r), std::move(rel_n), std::move(lin));
}

RNGraph poset_to_complete_rn(const OrderedPoset& poset) {
  const std::size_t n = poset.size();
  std::vector<Pair> n_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const VertexId x = poset.order().at(i);
      const VertexId y = poset.order().at(j);
      if (!poset.R().contains(x, y)) {
        n_pairs.emplace_back(x, y);
      }
    }
  }
  std::vector<Pair> r(poset.R().pairs().begin(), poset.R().pairs().end());
  std::vector<VertexId> seq(poset.order().sequence().begin(), poset.order().sequence().end());
  return make_rn_graph(n, std::move(r), std::move(n_pairs), std::move(seq));
}

OrderedPoset complete_rn_to_poset(const RNGraph& graph) {
  if (!is_complete(graph)) {
    throw Error(ErrorCode::kInvalidInput, "RN graph is not complete");
  }
  std::vector<Pair> r(graph.R().pairs().begin(), graph.R().pairs().end());
  std::vector<VertexId> seq(graph.order().sequence().begin(), graph.order().sequence().end());
  return make_ordered_poset(graph.size(), std::move(r), std::move(seq));
}

bool is_complete(const RNGraph& graph) {
  const std::size_t n = graph.size();
  return graph.R().size() + graph.N().size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

OrderedPoset chain(std::size_t k) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidInput, "chain needs k >= 1");
  }
  std::vector<Pair> r;
  for (VertexId i = 0; i < k; ++i) {
    for (VertexId j = i + 1; j < k; ++j) {
      r.emplace_back(i, j);
    }
  }
  return make_ordered_poset(k, std::move(r), identity_sequence(k));
}

OrderedPoset antichain(std::size_t k) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidInput, "antichain needs k >= 1");
  }
  return make_ordered_poset(k, {}, identity_sequence(k));
}

RNGraph relabel_to_identity_order(const RNGraph& graph) {
  if (graph.order().is_identity()) {
    return graph;
  }
  auto relabel = [&](const Relation& rel) {
    std::vector<Pair> out;
    out.reserve(rel.size());
    for (const Pair& p : rel.pairs()) {
      out.emplace_back(static_cast<VertexId>(graph.order().rank(p.first)),
                       static_cast<VertexId>(graph.order().rank(p.second)));
    }
    return out;
  };
  return make_rn_graph(graph.size(), relabel(graph.R()), relabel(graph.N()),
                       identity_sequence(graph.size()));
}

}  // namespace oramsey
