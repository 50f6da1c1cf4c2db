#include "oramsey/partite.hpp"

#include <algorithm>

#include "oramsey/analysis.hpp"

namespace oramsey {
namespace {

std::string edge_text(const Pair& p, std::size_t i, std::size_t j) {
  return format_pair(p) + " between parts " + std::to_string(i) + " and " + std::to_string(j);
}

}  // namespace

APartiteRNGraph make_apartite(const RNGraph& a, std::vector<std::vector<VertexId>> parts,
                              const RNGraph& base) {
  if (!is_complete(a) || !is_good(a)) {
    throw Error(ErrorCode::kInvalidInput, "A must be a complete, good RN graph");
  }
  if (parts.size() != a.size()) {
    throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(a.size()) + " parts, got " +
                                              std::to_string(parts.size()));
  }
  const std::size_t n = base.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(n, kNone);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (VertexId v : parts[i]) {
      if (v >= n) {
        throw Error(ErrorCode::kInvalidInput, "part " + std::to_string(i) + " names vertex " +
                                                  std::to_string(v) + " >= n");
      }
      if (part_of[v] != kNone) {
        throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) + " lies in two parts");
      }
      part_of[v] = i;
    }
    std::sort(parts[i].begin(), parts[i].end(),
              [&](VertexId x, VertexId y) { return base.order().before(x, y); });
  }
  for (VertexId v = 0; v < n; ++v) {
    if (part_of[v] == kNone) {
      throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) + " lies in no part");
    }
  }

  auto scan = [&](const Relation& rel, const Relation& over, const char* name) {
    for (const Pair& p : rel.pairs()) {
      const std::size_t i = part_of[p.first];
      const std::size_t j = part_of[p.second];
      if (i == j) {
        throw Error(ErrorCode::kIntraPartEdge,
                    std::string(name) + "-edge " + format_pair(p) + " inside part " + std::to_string(i));
      }
    }
    for (const Pair& p : rel.pairs()) {
      const std::size_t i = part_of[p.first];
      const std::size_t j = part_of[p.second];
      if (!over.contains(a.order().at(i), a.order().at(j))) {
        throw Error(ErrorCode::kPartProjectionViolation,
                    std::string(name) + "-edge " + edge_text(p, i, j) + " has no " + name +
                        "-pair of A above it");
      }
    }
  };
  scan(base.R(), a.R(), "R");
  scan(base.N(), a.N(), "N");

  for (std::size_t pos = 1; pos < n; ++pos) {
    const VertexId prev = base.order().at(pos - 1);
    const VertexId cur = base.order().at(pos);
    if (part_of[cur] < part_of[prev]) {
      throw Error(ErrorCode::kPartOrderViolation,
                  "vertex " + std::to_string(cur) + " of part " + std::to_string(part_of[cur]) +
                      " follows vertex " + std::to_string(prev) + " of part " +
                      std::to_string(part_of[prev]));
    }
  }

  APartiteRNGraph out;
  out.base_ = base;
  out.a_ = a;
  out.parts_ = std::move(parts);
  out.part_of_ = std::move(part_of);
  return out;
}

APartiteRNGraph make_apartite(const RNGraph& a, std::vector<std::vector<VertexId>> parts,
                              std::size_t n, std::vector<Pair> r, std::vector<Pair> n_pairs,
                              std::vector<VertexId> order) {
  return make_apartite(a, std::move(parts),
                       make_rn_graph(n, std::move(r), std::move(n_pairs), std::move(order)));
}

Homomorphism projection(const APartiteRNGraph& e) {
  Homomorphism psi;
  psi.map.resize(e.base().size());
  for (VertexId v = 0; v < e.base().size(); ++v) {
    psi.map[v] = e.A().order().at(e.part_of(v));
  }
  return psi;
}

std::vector<Copy> crossing_copies(const APartiteRNGraph& e) {
  std::vector<Copy> copies = enumerate_copies(e.A(), e.base());
  for (const Copy& c : copies) {
    std::vector<std::size_t> hits(e.part_count(), 0);
    for (VertexId v : c.image) {
      ++hits[e.part_of(v)];
    }
    if (std::any_of(hits.begin(), hits.end(), [](std::size_t h) { return h != 1; })) {
      throw Error(ErrorCode::kInvariantViolation, "copy of A is not crossing");
    }
  }
  return copies;
}

std::vector<Copy> partite_embeddings(const APartiteRNGraph& e, const APartiteRNGraph& f) {
  if (!(e.A() == f.A())) {
    throw Error(ErrorCode::kInvalidInput, "partite embeddings need the same A");
  }
  std::vector<Copy> out;
  for_each_copy(
      e.base(), f.base(),
      [&](const Copy& c) {
        out.push_back(c);
        return true;
      },
      [&](VertexId source, VertexId target) { return e.part_of(source) == f.part_of(target); });
  if (!f.base().order().is_identity()) {
    std::sort(out.begin(), out.end(), [](const Copy& x, const Copy& y) { return x.image < y.image; });
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ProductRule rule) {
  switch (rule) {
    case ProductRule::kNFromFbarN: return "n-from-fbar-n";
    case ProductRule::kVerbatim: return "verbatim";
  }
  return "unknown";
}

LiftCorrespondence::LiftCorrespondence(RNGraph a, RNGraph fbar, std::vector<std::size_t> e_part_of)
    : a_(std::move(a)), fbar_(std::move(fbar)), e_part_of_(std::move(e_part_of)) {}

VertexId LiftCorrespondence::product_vertex(std::size_t part, VertexId fbar_vertex) const {
  return static_cast<VertexId>(part * fbar_.size() + fbar_.order().rank(fbar_vertex));
}

std::size_t LiftCorrespondence::part_of(VertexId product_vertex) const {
  return product_vertex / fbar_.size();
}

VertexId LiftCorrespondence::fbar_vertex(VertexId product_vertex) const {
  return fbar_.order().at(product_vertex % fbar_.size());
}

Copy LiftCorrespondence::lift_a(const Copy& a_in_fbar) const {
  Copy out;
  out.map.resize(a_in_fbar.map.size());
  for (VertexId v = 0; v < out.map.size(); ++v) {
    out.map[v] = product_vertex(a_.order().rank(v), a_in_fbar.map[v]);
  }
  out.image = out.map;
  std::sort(out.image.begin(), out.image.end());
  return out;
}

Copy LiftCorrespondence::lift_e(const Copy& e_in_fbar) const {
  if (e_in_fbar.map.size() != e_part_of_.size()) {
    throw Error(ErrorCode::kInvalidInput, "copy size does not match E");
  }
  Copy out;
  out.map.resize(e_in_fbar.map.size());
  for (VertexId x = 0; x < out.map.size(); ++x) {
    out.map[x] = product_vertex(e_part_of_[x], e_in_fbar.map[x]);
  }
  out.image = out.map;
  std::sort(out.image.begin(), out.image.end());
  return out;
}

std::optional<Copy> LiftCorrespondence::project(const Copy& a_in_f) const {
  Copy out;
  out.map.resize(a_in_f.map.size());
  for (VertexId v = 0; v < out.map.size(); ++v) {
    if (part_of(a_in_f.map[v]) != a_.order().rank(v)) {
      return std::nullopt;
    }
    out.map[v] = fbar_vertex(a_in_f.map[v]);
  }
  if (!is_embedding(out.map, a_, fbar_)) {
    return std::nullopt;
  }
  out.image = out.map;
  std::sort(out.image.begin(), out.image.end());
  return out;
}

Coloring LiftCorrespondence::transfer_coloring(const Coloring& on_f,
                                               const std::vector<Copy>& a_in_fbar) const {
  std::vector<std::vector<VertexId>> images;
  std::vector<int> colors;
  for (const Copy& c : a_in_fbar) {
    auto color = on_f.color_of(lift_a(c).image);
    if (!color) {
      throw Error(ErrorCode::kInvalidInput, "colouring misses a diagonal copy");
    }
    images.push_back(c.image);
    colors.push_back(*color);
  }
  return Coloring(std::move(images), std::move(colors), on_f.num_colors());
}

APartiteRNGraph build_product(const RNGraph& a, const RNGraph& fbar, ProductRule rule) {
  const std::size_t m = fbar.size();
  const std::size_t n = a.size() * m;
  auto id = [&](VertexId av, VertexId u) {
    return static_cast<VertexId>(a.order().rank(av) * m + fbar.order().rank(u));
  };
  std::vector<Pair> r;
  std::vector<Pair> nn;
  for (const Pair& ap : a.R().pairs()) {
    for (const Pair& up : fbar.R().pairs()) {
      r.emplace_back(id(ap.first, up.first), id(ap.second, up.second));
    }
  }
  const Relation& n_source = rule == ProductRule::kVerbatim ? fbar.R() : fbar.N();
  for (const Pair& ap : a.N().pairs()) {
    for (const Pair& up : n_source.pairs()) {
      nn.emplace_back(id(ap.first, up.first), id(ap.second, up.second));
    }
  }
  std::vector<std::vector<VertexId>> parts(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      parts[i].push_back(static_cast<VertexId>(i * m + k));
    }
  }
  return make_apartite(a, std::move(parts), n, std::move(r), std::move(nn), identity_sequence(n));
}

std::vector<Copy> ProductResult::lifted_copies(const APartiteRNGraph& e) const {
  std::vector<Copy> out;
  for (const Copy& c : enumerate_copies(e.base(), fbar)) {
    out.push_back(lifts.lift_e(c));
  }
  return out;
}

ProductResult product_construction(const RNGraph& a, const APartiteRNGraph& e,
                                   const BaseOracle& oracle, ProductRule rule) {
  if (!(e.A() == a)) {
    throw Error(ErrorCode::kInvalidInput, "E is partite over a different A");
  }
  OracleWitness witness = oracle_ramsey(oracle, a, e.base());
  ProductResult out;
  out.f = build_product(a, witness.graph, rule);
  out.fbar = witness.graph;
  out.certification = witness.certification;
  out.candidates_examined = witness.candidates_examined;
  std::vector<std::size_t> e_part_of(e.base().size());
  for (VertexId x = 0; x < e.base().size(); ++x) {
    e_part_of[x] = e.part_of(x);
  }
  out.lifts = LiftCorrespondence(a, witness.graph, std::move(e_part_of));
  return out;
}

ArrowVerdict check_partite_arrow(const APartiteRNGraph& f, const APartiteRNGraph& e, int num_colors,
                                 const SearchLimits& limits) {
  std::vector<Copy> a_copies = crossing_copies(f);
  std::vector<Copy> e_copies = partite_embeddings(e, f);
  const std::vector<Copy> a_in_e = crossing_copies(e);
  std::map<std::vector<VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < a_copies.size(); ++i) {
    index.emplace(a_copies[i].image, i);
  }
  std::vector<std::vector<std::size_t>> members;
  members.reserve(e_copies.size());
  for (const Copy& ec : e_copies) {
    std::vector<std::size_t> mem;
    for (const Copy& ac : a_in_e) {
      std::vector<VertexId> image;
      for (VertexId v : ac.map) {
        image.push_back(ec.map[v]);
      }
      std::sort(image.begin(), image.end());
      auto it = index.find(image);
      if (it == index.end()) {
        throw Error(ErrorCode::kInvariantViolation, "composed copy of A is not crossing");
      }
      mem.push_back(it->second);
    }
    members.push_back(std::move(mem));
  }
  auto instance =
      std::make_shared<const ArrowInstance>(std::move(a_copies), std::move(e_copies), std::move(members));
  return check_arrow(std::move(instance), num_colors, limits);
}

}  // namespace oramsey
