#include "oramsey/embeddings.hpp"

#include <algorithm>

namespace oramsey {
namespace {

enum class PairKind { kNone, kR, kN };

PairKind kind_of(const RNGraph& g, VertexId x, VertexId y) {
  if (g.R().contains(x, y)) {
    return PairKind::kR;
  }
  if (g.N().contains(x, y)) {
    return PairKind::kN;
  }
  return PairKind::kNone;
}

class Backtracker {
 public:
  Backtracker(const RNGraph& pattern, const RNGraph& host, const CopyVisitor& visit,
              const CandidateFilter& filter)
      : pattern_(pattern), host_(host), visit_(visit), filter_(filter) {
    const std::size_t k = pattern.size();
    kinds_.assign(k, std::vector<PairKind>(k, PairKind::kNone));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        kinds_[i][j] = kind_of(pattern, pattern.order().at(i), pattern.order().at(j));
      }
    }
    positions_.resize(k);
    copy_.map.assign(k, 0);
  }

  void run() {
    if (pattern_.size() > host_.size()) {
      return;
    }
    if (pattern_.size() == 0) {
      visit_(copy_);
      return;
    }
    extend(0, 0);
  }

 private:
  // Maps the pattern vertex at order position `depth` to a host position
  // >= `from`.
  bool extend(std::size_t depth, std::size_t from) {
    const std::size_t k = pattern_.size();
    const std::size_t last = host_.size() - (k - depth);
    // An earlier neighbour narrows the candidates to its host successors.
    const Relation* anchor_rel = nullptr;
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < depth; ++i) {
      if (kinds_[i][depth] != PairKind::kNone) {
        anchor_rel = kinds_[i][depth] == PairKind::kR ? &host_.R() : &host_.N();
        anchor = i;
        break;
      }
    }
    if (anchor_rel == nullptr) {
      for (std::size_t pos = from; pos <= last; ++pos) {
        if (!try_position(depth, pos)) {
          return false;
        }
      }
      return true;
    }
    std::vector<std::size_t> candidates;
    for (VertexId t : anchor_rel->successors(host_.order().at(positions_[anchor]))) {
      const std::size_t pos = host_.order().rank(t);
      if (pos >= from && pos <= last) {
        candidates.push_back(pos);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (std::size_t pos : candidates) {
      if (!try_position(depth, pos)) {
        return false;
      }
    }
    return true;
  }

  bool try_position(std::size_t depth, std::size_t pos) {
    const std::size_t k = pattern_.size();
    const VertexId source = pattern_.order().at(depth);
    const VertexId target = host_.order().at(pos);
    if (filter_ && !filter_(source, target)) {
      return true;
    }
    for (std::size_t i = 0; i < depth; ++i) {
      if (kind_of(host_, host_.order().at(positions_[i]), target) != kinds_[i][depth]) {
        return true;
      }
    }
    positions_[depth] = pos;
    copy_.map[source] = target;
    if (depth + 1 == k) {
      copy_.image = copy_.map;
      std::sort(copy_.image.begin(), copy_.image.end());
      return visit_(copy_);
    }
    return extend(depth + 1, pos + 1);
  }

  const RNGraph& pattern_;
  const RNGraph& host_;
  const CopyVisitor& visit_;
  const CandidateFilter& filter_;
  std::vector<std::vector<PairKind>> kinds_;
  std::vector<std::size_t> positions_;
  Copy copy_;
};

}  // namespace

void for_each_copy(const RNGraph& pattern, const RNGraph& host, const CopyVisitor& visit,
                   const CandidateFilter& filter) {
  Backtracker(pattern, host, visit, filter).run();
}

std::vector<Copy> enumerate_copies(const RNGraph& pattern, const RNGraph& host) {
  std::vector<Copy> out;
  for_each_copy(pattern, host, [&](const Copy& c) {
    out.push_back(c);
    return true;
  });
  if (!host.order().is_identity()) {
    std::sort(out.begin(), out.end(),
              [](const Copy& a, const Copy& b) { return a.image < b.image; });
  }
  return out;
}

std::vector<Copy> enumerate_copies(const OrderedPoset& pattern, const OrderedPoset& host) {
  return enumerate_copies(poset_to_complete_rn(pattern), poset_to_complete_rn(host));
}

std::size_t count_copies(const RNGraph& pattern, const RNGraph& host) {
  std::size_t count = 0;
  for_each_copy(pattern, host, [&](const Copy&) {
    ++count;
    return true;
  });
  return count;
}

bool is_embedding(std::span<const VertexId> map, const RNGraph& pattern, const RNGraph& host) {
  const std::size_t k = pattern.size();
  if (map.size() != k) {
    return false;
  }
  for (std::size_t x = 0; x < k; ++x) {
    if (map[x] >= host.size()) {
      return false;
    }
  }
  for (VertexId x = 0; x < k; ++x) {
    for (VertexId y = 0; y < k; ++y) {
      if (x == y) {
        continue;
      }
      if (map[x] == map[y]) {
        return false;
      }
      if (pattern.order().before(x, y) != host.order().before(map[x], map[y])) {
        return false;
      }
      if (pattern.R().contains(x, y) != host.R().contains(map[x], map[y])) {
        return false;
      }
      if (pattern.N().contains(x, y) != host.N().contains(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

bool is_embedding(std::span<const VertexId> map, const OrderedPoset& pattern,
                  const OrderedPoset& host) {
  return is_embedding(map, poset_to_complete_rn(pattern), poset_to_complete_rn(host));
}

RNGraph induced_subgraph(const RNGraph& host, std::span<const VertexId> vertices,
                         std::vector<VertexId>* new_to_host) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end(), [&](VertexId a, VertexId b) {
    return host.order().rank(a) < host.order().rank(b);
  });
  std::vector<VertexId> host_to_new(host.size(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    host_to_new[sorted[i]] = static_cast<VertexId>(i);
  }
  auto restrict = [&](const Relation& rel) {
    std::vector<Pair> out;
    for (VertexId x : sorted) {
      for (VertexId y : rel.successors(x)) {
        if (host_to_new[y] != static_cast<VertexId>(-1)) {
          out.emplace_back(host_to_new[x], host_to_new[y]);
        }
      }
    }
    return out;
  };
  RNGraph out = make_rn_graph(sorted.size(), restrict(host.R()), restrict(host.N()),
                              identity_sequence(sorted.size()));
  if (new_to_host != nullptr) {
    *new_to_host = std::move(sorted);
  }
  return out;
}

}  // namespace oramsey
