#include "oramsey/construction.hpp"

#include <algorithm>

#include "oramsey/analysis.hpp"
#include "oramsey/embeddings.hpp"

namespace oramsey {
namespace {

constexpr VertexId kUnset = static_cast<VertexId>(-1);

void require_identity(const RNGraph& g, const char* what) {
  if (!g.order().is_identity()) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " must be identity ordered");
  }
}

// `map` sends p into host; checks that it is increasing and that every
// edge of host between two image vertices comes from an edge of p of the
// same kind. Forward preservation holds by construction of the glue.
bool copy_is_induced(const std::vector<VertexId>& map, const RNGraph& p, const RNGraph& host,
                     std::vector<VertexId>& inverse) {
  bool ok = true;
  for (std::size_t w = 0; w < map.size(); ++w) {
    if (w > 0 && map[w] <= map[w - 1]) {
      ok = false;
    }
    inverse[map[w]] = static_cast<VertexId>(w);
  }
  for (std::size_t w = 0; ok && w < map.size(); ++w) {
    for (VertexId s : host.R().successors(map[w])) {
      if (inverse[s] != kUnset && !p.R().contains(static_cast<VertexId>(w), inverse[s])) {
        ok = false;
        break;
      }
    }
    for (VertexId s : host.N().successors(map[w])) {
      if (!ok) {
        break;
      }
      if (inverse[s] != kUnset && !p.N().contains(static_cast<VertexId>(w), inverse[s])) {
        ok = false;
      }
    }
  }
  for (VertexId v : map) {
    inverse[v] = kUnset;
  }
  return ok;
}

void check_pair_disjoint(std::vector<Pair>& r, std::vector<Pair>& n) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  std::vector<Pair> both;
  std::set_intersection(r.begin(), r.end(), n.begin(), n.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw Error(ErrorCode::kGlueConflict,
                "pair " + format_pair(both.front()) + " is glued as both R and N");
  }
}

}  // namespace

Picture make_picture(RNGraph base, RNGraph d, Homomorphism f) {
  require_identity(base, "picture");
  require_identity(d, "D");
  if (f.map.size() != base.size()) {
    throw Error(ErrorCode::kInvalidInput, "part map has the wrong length");
  }
  Picture p;
  p.parts.assign(d.size(), {});
  for (VertexId v = 0; v < base.size(); ++v) {
    if (f.map[v] >= d.size()) {
      throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v) + " maps outside D");
    }
    if (v > 0 && f.map[v] < f.map[v - 1]) {
      throw Error(ErrorCode::kPartOrderViolation,
                  "vertex " + std::to_string(v) + " of part " + std::to_string(f.map[v]) +
                      " follows part " + std::to_string(f.map[v - 1]));
    }
    p.parts[f.map[v]].push_back(v);
  }
  if (!check_homomorphism(f, base, d)) {
    throw Error(ErrorCode::kInvalidInput, "part map is not a homomorphism onto D");
  }
  p.origin.resize(base.size());
  for (VertexId v = 0; v < base.size(); ++v) {
    p.origin[v] = {0, v};
  }
  p.base = std::move(base);
  p.d = std::move(d);
  p.f = std::move(f);
  return p;
}

Picture build_picture_zero(const RNGraph& d, const RNGraph& b) {
  require_identity(d, "D");
  const std::vector<Copy> copies = enumerate_copies(b, d);
  if (copies.empty()) {
    throw Error(ErrorCode::kNoCopiesOfB, "B has no copy in D");
  }
  // Which B vertex of copy h sits over D vertex i, if any.
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> over(d.size());
  for (std::size_t h = 0; h < copies.size(); ++h) {
    for (VertexId x = 0; x < b.size(); ++x) {
      over[copies[h].map[x]].emplace_back(h, x);
    }
  }
  std::vector<std::vector<VertexId>> vid(copies.size(), std::vector<VertexId>(b.size()));
  std::vector<VertexId> f;
  std::vector<VertexOrigin> origin;
  VertexId next = 0;
  for (VertexId i = 0; i < d.size(); ++i) {
    std::sort(over[i].begin(), over[i].end());
    for (const auto& [h, x] : over[i]) {
      vid[h][x] = next++;
      f.push_back(i);
      origin.push_back({static_cast<std::int64_t>(h), x});
    }
  }
  std::vector<Pair> r;
  std::vector<Pair> n;
  for (std::size_t h = 0; h < copies.size(); ++h) {
    for (const Pair& e : b.R().pairs()) {
      r.emplace_back(vid[h][e.first], vid[h][e.second]);
    }
    for (const Pair& e : b.N().pairs()) {
      n.emplace_back(vid[h][e.first], vid[h][e.second]);
    }
  }
  RNGraph base = make_rn_graph(next, std::move(r), std::move(n), identity_sequence(next));
  Picture p = make_picture(std::move(base), d, Homomorphism{std::move(f)});
  p.origin = std::move(origin);
  if (!is_good(p.base)) {
    throw Error(ErrorCode::kInvariantViolation, "initial picture is not good");
  }
  return p;
}

Subsystem induced_subsystem(const Picture& p, const RNGraph& a, const Copy& a_copy) {
  std::vector<VertexId> vertices;
  std::vector<VertexId> over(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    over[t] = a_copy.map[a.order().at(t)];
    const auto& part = p.parts[over[t]];
    vertices.insert(vertices.end(), part.begin(), part.end());
  }
  Subsystem sub;
  RNGraph base = induced_subgraph(p.base, vertices, &sub.to_picture);
  std::vector<std::vector<VertexId>> parts(a.size());
  for (VertexId x = 0; x < sub.to_picture.size(); ++x) {
    const VertexId dv = p.f.map[sub.to_picture[x]];
    const auto t = static_cast<std::size_t>(std::find(over.begin(), over.end(), dv) - over.begin());
    parts[t].push_back(x);
  }
  sub.e = make_apartite(a, std::move(parts), base);
  return sub;
}

AmalgamationResult amalgamate(const Picture& p, const Subsystem& sub, const APartiteRNGraph& f,
                              const std::vector<Copy>& lifts, std::size_t max_vertices,
                              bool verify_copies) {
  const std::size_t np = p.base.size();
  const std::size_t ne = sub.e.base().size();
  std::vector<VertexId> in_sub(np, kUnset);
  for (VertexId x = 0; x < ne; ++x) {
    in_sub[sub.to_picture[x]] = x;
  }
  std::vector<bool> used(f.base().size(), false);
  std::size_t shared_count = 0;
  for (const Copy& c : lifts) {
    for (VertexId v : c.image) {
      if (!used[v]) {
        used[v] = true;
        ++shared_count;
      }
    }
  }
  const std::size_t fresh_count = lifts.size() * (np - ne);
  const std::size_t total = shared_count + fresh_count;
  if (total > max_vertices) {
    throw Error(ErrorCode::kResourceExceeded,
                "amalgamation needs " + std::to_string(total) + " vertices (" +
                    std::to_string(lifts.size()) + " copies of a " + std::to_string(np) +
                    "-vertex picture), ceiling is " + std::to_string(max_vertices));
  }

  // Part of F over each non-empty part of D under the chosen copy of A.
  // An empty part contributes no vertices either way.
  std::vector<std::size_t> f_part(p.d.size(), static_cast<std::size_t>(-1));
  for (VertexId x = 0; x < ne; ++x) {
    f_part[p.f.map[sub.to_picture[x]]] = sub.e.part_of(x);
  }

  std::vector<VertexId> shared_id(f.base().size(), kUnset);
  std::vector<VertexId> fresh_id(fresh_count == 0 ? 0 : lifts.size() * np, kUnset);
  std::vector<VertexId> part_map;
  std::vector<VertexOrigin> origin;
  part_map.reserve(total);
  origin.reserve(total);
  VertexId next = 0;
  for (VertexId i = 0; i < p.d.size(); ++i) {
    const bool shared_part = std::any_of(p.parts[i].begin(), p.parts[i].end(),
                                         [&](VertexId w) { return in_sub[w] != kUnset; });
    if (shared_part) {
      for (VertexId v : f.part(f_part[i])) {
        if (used[v]) {
          shared_id[v] = next++;
          part_map.push_back(i);
          origin.push_back({VertexOrigin::kShared, v});
        }
      }
      continue;
    }
    for (VertexId w : p.parts[i]) {
      for (std::size_t k = 0; k < lifts.size(); ++k) {
        fresh_id[k * np + w] = next++;
        part_map.push_back(i);
        origin.push_back({static_cast<std::int64_t>(k), w});
      }
    }
  }

  AmalgamationResult out;
  out.glue_maps.resize(lifts.size());
  std::vector<Pair> r;
  std::vector<Pair> n;
  r.reserve(lifts.size() * p.base.R().size());
  n.reserve(lifts.size() * p.base.N().size());
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    auto& map = out.glue_maps[k];
    map.resize(np);
    for (VertexId w = 0; w < np; ++w) {
      map[w] = in_sub[w] != kUnset ? shared_id[lifts[k].map[in_sub[w]]] : fresh_id[k * np + w];
      if (map[w] == kUnset) {
        throw Error(ErrorCode::kInvariantViolation, "glue map left a vertex unplaced");
      }
    }
    for (const Pair& e : p.base.R().pairs()) {
      r.emplace_back(map[e.first], map[e.second]);
    }
    for (const Pair& e : p.base.N().pairs()) {
      n.emplace_back(map[e.first], map[e.second]);
    }
  }
  check_pair_disjoint(r, n);
  RNGraph base = make_rn_graph(next, std::move(r), std::move(n), identity_sequence(next));
  out.picture = make_picture(std::move(base), p.d, Homomorphism{std::move(part_map)});
  out.picture.origin = std::move(origin);
  out.shared_vertices = shared_count;
  out.fresh_vertices = fresh_count;

  std::vector<VertexId> inverse(next, kUnset);
  for (std::size_t k = 0; k < lifts.size(); ++k) {
    const auto& map = out.glue_maps[k];
    for (VertexId w = 0; w < np; ++w) {
      if (out.picture.f.map[map[w]] != p.f.map[w]) {
        throw Error(ErrorCode::kInvariantViolation, "glued copy does not lie over D like the picture");
      }
    }
    if (verify_copies && !copy_is_induced(map, p.base, out.picture.base, inverse)) {
      throw Error(ErrorCode::kGlueConflict,
                  "glued copy " + std::to_string(k) + " is not an induced copy of the picture");
    }
  }
  return out;
}

ConstructionResult run_partite_construction(const RNGraph& d, const RNGraph& a, const RNGraph& b,
                                            const ConstructionOptions& options,
                                            std::optional<std::size_t> ell,
                                            std::vector<StepReport>* progress) {
  const RNGraph dd = d.order().is_identity() ? d : relabel_to_identity_order(d);
  const std::vector<Copy> a_copies = enumerate_copies(a, dd);
  ConstructionResult result;
  result.picture = build_picture_zero(dd, b);
  if (ell && !is_ell_rn(result.picture.base, *ell)) {
    throw Error(ErrorCode::kInvariantViolation, "initial picture is not " + std::to_string(*ell) + "-RN");
  }
  for (std::size_t j = 0; j < a_copies.size(); ++j) {
    const Picture& p = result.picture;
    const Subsystem sub = induced_subsystem(p, a, a_copies[j]);
    const ProductResult prod = product_construction(a, sub.e, options.oracle, options.rule);
    const std::vector<Copy> lifts = prod.lifted_copies(sub.e);
    AmalgamationResult next =
        amalgamate(p, sub, prod.f, lifts, options.max_vertices, options.verify_copies);

    StepReport report;
    report.step = j + 1;
    report.a_copy = a_copies[j].image;
    report.e_vertices = sub.e.base().size();
    report.fbar_vertices = prod.fbar.size();
    report.lifts = lifts.size();
    report.shared = next.shared_vertices;
    report.fresh = next.fresh_vertices;
    report.vertices = next.picture.base.size();
    report.r_edges = next.picture.base.R().size();
    report.n_edges = next.picture.base.N().size();
    report.certification = prod.certification;
    report.oracle_candidates = prod.candidates_examined;
    if (ell) {
      report.ell_rn = is_ell_rn(next.picture.base, *ell);
      if (!report.ell_rn) {
        throw Error(ErrorCode::kInvariantViolation,
                    "picture after step " + std::to_string(j + 1) + " is not " + std::to_string(*ell) + "-RN");
      }
    }
    result.certification = combine(result.certification, report.certification);
    result.picture = std::move(next.picture);
    result.steps.push_back(report);
    if (progress != nullptr) {
      progress->push_back(report);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

Certification Tower::certification() const {
  Certification c = Certification::kCertified;
  for (const TowerStage& s : stages) {
    c = combine(c, s.certification);
  }
  return c;
}

Tower build_tower(const RNGraph& a, const RNGraph& b, std::size_t ell_max, const TowerOptions& options) {
  if (ell_max < 2) {
    throw Error(ErrorCode::kInvalidInput, "ell_max must be at least 2");
  }
  for (const RNGraph* g : {&a, &b}) {
    if (!is_complete(*g) || !is_good(*g)) {
      throw Error(ErrorCode::kInvalidInput, "A and B must be complete RN graphs of posets");
    }
  }
  Tower tower;
  tower.a = a;
  tower.b = b;
  const OracleWitness witness = oracle_ramsey(options.c2_oracle, a, b);
  TowerStage first;
  first.ell = 2;
  first.c = relabel_to_identity_order(witness.graph);
  first.h_star = identity_homomorphism(first.c.size());
  first.certification = witness.certification;
  tower.stages.push_back(std::move(first));

  for (std::size_t ell = 3; ell <= ell_max; ++ell) {
    const TowerStage& prev = tower.stages.back();
    TowerStage stage;
    stage.ell = ell;
    std::vector<StepReport> progress;
    try {
      if (options.reuse_stable_stages && is_good(prev.c)) {
        stage.c = prev.c;
        stage.h_down = identity_homomorphism(prev.c.size());
        stage.certification = prev.certification;
        stage.reused = true;
      } else {
        ConstructionResult built =
            run_partite_construction(prev.c, a, b, options.construction, ell, &progress);
        stage.c = std::move(built.picture.base);
        stage.h_down = std::move(built.picture.f);
        stage.certification = combine(prev.certification, built.certification);
        stage.steps = std::move(built.steps);
      }
      if (!is_ell_rn(stage.c, ell)) {
        throw Error(ErrorCode::kInvariantViolation, "C_" + std::to_string(ell) + " is not ell-RN");
      }
      if (!check_homomorphism(stage.h_down, stage.c, prev.c)) {
        throw Error(ErrorCode::kInvariantViolation, "h_" + std::to_string(ell - 1) + " is not a homomorphism");
      }
      stage.h_star = compose(prev.h_star, stage.h_down);
      if (!check_homomorphism(stage.h_star, stage.c, tower.stages.front().c)) {
        throw Error(ErrorCode::kInvariantViolation, "composed map into C_2 is not a homomorphism");
      }
    } catch (const Error& err) {
      tower.truncation = TowerTruncation{ell, err.code(), err.detail(), std::move(progress)};
      break;
    }
    tower.stages.push_back(std::move(stage));
  }
  return tower;
}

Tower build_tower(const OrderedPoset& a, const OrderedPoset& b, std::size_t ell_max,
                  const TowerOptions& options) {
  return build_tower(poset_to_complete_rn(a), poset_to_complete_rn(b), ell_max, options);
}

FinishResult finish(const Tower& tower) {
  if (tower.stages.empty()) {
    throw Error(ErrorCode::kTowerTooShort, "tower is empty");
  }
  FinishResult out;
  out.lambda = tower.lambda();
  const std::size_t need = std::max<std::size_t>(out.lambda, 2);
  auto it = std::find_if(tower.stages.begin(), tower.stages.end(),
                         [&](const TowerStage& s) { return s.ell == need; });
  if (it == tower.stages.end()) {
    throw Error(ErrorCode::kTowerTooShort, "finishing needs C_" + std::to_string(need) +
                                               " (lambda = |X(C_2)| = " + std::to_string(out.lambda) +
                                               "), tower reaches " + std::to_string(tower.reached()));
  }
  const RNGraph& c = it->c;
  out.longest_path = longest_r_path_vertices(c);
  if (out.longest_path > out.lambda) {
    throw Error(ErrorCode::kInvariantViolation, "R-path with " + std::to_string(out.longest_path) +
                                                    " vertices exceeds lambda");
  }
  const Relation closure = transitive_closure(c.R(), c.size());
  for (const Pair& p : c.N().pairs()) {
    if (closure.contains(p.first, p.second)) {
      throw Error(ErrorCode::kClosureIntersectsN, "closure contains N pair " + format_pair(p));
    }
  }
  out.closure_added = closure.size() - c.R().size();
  std::vector<Pair> pairs(closure.pairs().begin(), closure.pairs().end());
  std::vector<VertexId> order(c.order().sequence().begin(), c.order().sequence().end());
  out.poset = make_ordered_poset(c.size(), std::move(pairs), std::move(order));

  const std::vector<Copy> copies = enumerate_copies(tower.b, c);
  out.b_copies = copies.size();
  for (const Copy& copy : copies) {
    bool intact = true;
    for (VertexId x = 0; x < tower.b.size() && intact; ++x) {
      for (VertexId y = 0; y < tower.b.size(); ++y) {
        if (x != y && closure.contains(copy.map[x], copy.map[y]) != tower.b.R().contains(x, y)) {
          intact = false;
          break;
        }
      }
    }
    out.b_copies_intact += intact ? 1 : 0;
  }
  if (out.b_copies_intact != out.b_copies) {
    throw Error(ErrorCode::kInvariantViolation,
                std::to_string(out.b_copies - out.b_copies_intact) + " copies of B broken by the closure");
  }
  out.b_copies_after = count_copies(tower.b, poset_to_complete_rn(out.poset));
  return out;
}

Copy extract_monochromatic_b(const RNGraph& host, const Coloring& coloring, const RNGraph& b,
                             const RNGraph& a) {
  auto copy = find_monochromatic(host, coloring, b, a);
  if (!copy) {
    throw Error(ErrorCode::kNoneFound, "no copy of B has all its copies of A in one colour");
  }
  return *copy;
}

Copy extract_monochromatic_b(const Picture& p, const Coloring& coloring, const RNGraph& b,
                             const RNGraph& a) {
  return extract_monochromatic_b(p.base, coloring, b, a);
}

}  // namespace oramsey
