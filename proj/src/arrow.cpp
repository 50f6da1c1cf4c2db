#include "oramsey/arrow.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace oramsey {

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::kCertified: return "certified";
    case Certification::kConditional: return "conditionally correct";
    case Certification::kAssumed: return "assumed";
  }
  return "unknown";
}

Certification combine(Certification a, Certification b) {
  return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

std::string_view to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::kSearch: return "search";
    case OracleMode::kFile: return "file";
    case OracleMode::kAssume: return "assume";
  }
  return "unknown";
}

Coloring::Coloring(std::vector<std::vector<VertexId>> images, std::vector<int> colors,
                   int num_colors)
    : num_colors_(num_colors) {
  if (images.size() != colors.size()) {
    throw Error(ErrorCode::kInvalidInput, "colouring has mismatched image and colour counts");
  }
  std::vector<std::size_t> idx(images.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return images[a] < images[b]; });
  for (std::size_t i : idx) {
    if (colors[i] < 0 || colors[i] >= num_colors) {
      throw Error(ErrorCode::kInvalidInput, "colour " + std::to_string(colors[i]) + " out of range");
    }
    if (!images_.empty() && images_.back() == images[i]) {
      throw Error(ErrorCode::kInvalidInput, "colouring lists an image twice");
    }
    images_.push_back(std::move(images[i]));
    colors_.push_back(colors[i]);
  }
}

std::optional<int> Coloring::color_of(const std::vector<VertexId>& image) const {
  auto it = std::lower_bound(images_.begin(), images_.end(), image);
  if (it == images_.end() || *it != image) {
    return std::nullopt;
  }
  return colors_[static_cast<std::size_t>(it - images_.begin())];
}

ArrowInstance::ArrowInstance(const RNGraph& target, const RNGraph& q, const RNGraph& p)
    : p_copies_(enumerate_copies(p, target)), q_copies_(enumerate_copies(q, target)) {
  index_images();
  const std::vector<Copy> p_in_q = enumerate_copies(p, q);
  members_.reserve(q_copies_.size());
  std::vector<VertexId> image(p.size());
  for (const Copy& qc : q_copies_) {
    std::vector<std::size_t> mem;
    mem.reserve(p_in_q.size());
    for (const Copy& pc : p_in_q) {
      for (std::size_t v = 0; v < pc.map.size(); ++v) {
        image[v] = qc.map[pc.map[v]];
      }
      std::vector<VertexId> sorted = image;
      std::sort(sorted.begin(), sorted.end());
      auto idx = index_of(sorted);
      if (!idx) {
        throw Error(ErrorCode::kInvariantViolation, "composed embedding is not a copy");
      }
      mem.push_back(*idx);
    }
    members_.push_back(std::move(mem));
  }
}

ArrowInstance::ArrowInstance(std::vector<Copy> p_copies, std::vector<Copy> q_copies,
                             std::vector<std::vector<std::size_t>> members)
    : p_copies_(std::move(p_copies)), q_copies_(std::move(q_copies)), members_(std::move(members)) {
  if (members_.size() != q_copies_.size()) {
    throw Error(ErrorCode::kInvalidInput, "one member list per Q-copy required");
  }
  for (const auto& mem : members_) {
    for (std::size_t i : mem) {
      if (i >= p_copies_.size()) {
        throw Error(ErrorCode::kInvalidInput, "member index out of range");
      }
    }
  }
  index_images();
}

void ArrowInstance::index_images() {
  for (std::size_t i = 0; i < p_copies_.size(); ++i) {
    by_image_.emplace(p_copies_[i].image, i);
  }
}

std::optional<std::size_t> ArrowInstance::index_of(const std::vector<VertexId>& image) const {
  auto it = by_image_.find(image);
  if (it == by_image_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<std::size_t> ArrowInstance::first_monochromatic(std::span<const int> colors) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& mem = members_[i];
    const bool mono = std::all_of(mem.begin(), mem.end(),
                                  [&](std::size_t m) { return colors[m] == colors[mem.front()]; });
    if (mono) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<int> ArrowInstance::colors_for(const Coloring& coloring) const {
  std::vector<int> colors(p_copies_.size());
  for (std::size_t i = 0; i < p_copies_.size(); ++i) {
    auto c = coloring.color_of(p_copies_[i].image);
    if (!c) {
      throw Error(ErrorCode::kInvalidInput, "colouring misses a copy");
    }
    colors[i] = *c;
  }
  return colors;
}

Coloring ArrowInstance::make_coloring(std::vector<int> colors, int num_colors) const {
  std::vector<std::vector<VertexId>> images;
  images.reserve(p_copies_.size());
  for (const Copy& c : p_copies_) {
    images.push_back(c.image);
  }
  return Coloring(std::move(images), std::move(colors), num_colors);
}

namespace {

// Backtracking search for a colouring with no monochromatic hyperedge.
// Colours are assigned in index order; an edge with one free vertex left
// whose assigned vertices share colour c removes c from that vertex.
class ProperColoringSearch {
 public:
  ProperColoringSearch(std::size_t m, const std::vector<std::vector<std::size_t>>& edges,
                       int num_colors, const SearchLimits& limits)
      : m_(m), edges_(edges), r_(num_colors), limits_(limits) {
    incident_.resize(m);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      for (std::size_t v : edges_[e]) {
        incident_[v].push_back(e);
      }
    }
    color_.assign(m, -1);
    domain_.assign(m, (num_colors >= 32 ? ~0U : (1U << num_colors) - 1U));
    free_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      free_[e] = edges_[e].size();
    }
    count_.assign(edges_.size() * static_cast<std::size_t>(r_), 0);
    start_ = std::chrono::steady_clock::now();
  }

  std::optional<std::vector<int>> run() {
    if (search(0, true)) {
      return color_;
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Undo {
    bool is_assign;
    std::size_t vertex;
    std::uint32_t bits;
  };

  std::size_t& count(std::size_t e, int c) { return count_[e * static_cast<std::size_t>(r_) + c]; }

  bool apply(std::size_t v, int c) {
    if (((domain_[v] >> c) & 1U) == 0) {
      return false;
    }
    color_[v] = c;
    trail_.push_back({true, v, 0});
    for (std::size_t e : incident_[v]) {
      --free_[e];
      ++count(e, c);
    }
    for (std::size_t e : incident_[v]) {
      const std::size_t size = edges_[e].size();
      if (count(e, c) == size) {
        return false;
      }
      if (free_[e] == 1 && count(e, c) == size - 1) {
        for (std::size_t u : edges_[e]) {
          if (color_[u] == -1) {
            if (!remove(u, c)) {
              return false;
            }
            break;
          }
        }
      }
    }
    return true;
  }

  bool remove(std::size_t u, int c) {
    const std::uint32_t bit = 1U << c;
    if ((domain_[u] & bit) == 0) {
      return true;
    }
    domain_[u] &= ~bit;
    trail_.push_back({false, u, bit});
    if (domain_[u] == 0) {
      return false;
    }
    if (std::has_single_bit(domain_[u])) {
      pending_.push_back(u);
    }
    return true;
  }

  bool decide(std::size_t v, int c) {
    pending_.clear();
    if (!apply(v, c)) {
      return false;
    }
    while (!pending_.empty()) {
      const std::size_t u = pending_.back();
      pending_.pop_back();
      if (color_[u] != -1) {
        continue;
      }
      if (!apply(u, std::countr_zero(domain_[u]))) {
        return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Undo u = trail_.back();
      trail_.pop_back();
      if (u.is_assign) {
        const int c = color_[u.vertex];
        for (std::size_t e : incident_[u.vertex]) {
          ++free_[e];
          --count(e, c);
        }
        color_[u.vertex] = -1;
      } else {
        domain_[u.vertex] |= u.bits;
      }
    }
  }

  void charge_node() {
    ++nodes_;
    if (nodes_ > limits_.max_nodes) {
      throw Error(ErrorCode::kResourceExceeded,
                  "colouring search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    }
    if (limits_.time_limit && (nodes_ & 1023U) == 0 &&
        std::chrono::steady_clock::now() - start_ > *limits_.time_limit) {
      throw Error(ErrorCode::kResourceExceeded, "colouring search exceeded its time limit");
    }
  }

  bool search(std::size_t from, bool root) {
    std::size_t v = from;
    while (v < m_ && color_[v] != -1) {
      ++v;
    }
    if (v == m_) {
      return true;
    }
    for (int c = 0; c < r_; ++c) {
      if (root && c > 0) {
        break;  // colours are interchangeable before anything is fixed
      }
      if (((domain_[v] >> c) & 1U) == 0) {
        continue;
      }
      charge_node();
      const std::size_t mark = trail_.size();
      if (decide(v, c) && search(v + 1, false)) {
        return true;
      }
      undo_to(mark);
    }
    return false;
  }

  std::size_t m_;
  const std::vector<std::vector<std::size_t>>& edges_;
  int r_;
  const SearchLimits& limits_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<int> color_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> count_;
  std::vector<Undo> trail_;
  std::vector<std::size_t> pending_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

bool has_monochromatic_edge(const std::vector<std::vector<std::size_t>>& edges,
                            const std::vector<int>& colors) {
  for (const auto& e : edges) {
    if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return colors[v] == colors[e.front()]; })) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_proper_coloring(
    std::size_t m, const std::vector<std::vector<std::size_t>>& hyperedges, int num_colors,
    const SearchLimits& limits, std::uint64_t* nodes_used) {
  if (num_colors < 1 || num_colors > 31) {
    throw Error(ErrorCode::kInvalidInput, "number of colours must lie in 1..31");
  }
  if (nodes_used != nullptr) {
    *nodes_used = 0;
  }
  for (const auto& e : hyperedges) {
    if (e.size() <= 1) {
      return std::nullopt;  // empty and singleton edges are always monochromatic
    }
  }
  if (hyperedges.empty()) {
    return std::vector<int>(m, 0);
  }
  if (num_colors == 1) {
    return std::nullopt;
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<int> pick(0, num_colors - 1);
  std::vector<int> sample(m);
  for (std::size_t s = 0; s < limits.sample_prepass; ++s) {
    for (int& c : sample) {
      c = pick(rng);
    }
    if (!has_monochromatic_edge(hyperedges, sample)) {
      return sample;
    }
  }
  ProperColoringSearch search(m, hyperedges, num_colors, limits);
  auto result = search.run();
  if (nodes_used != nullptr) {
    *nodes_used = search.nodes();
  }
  return result;
}

std::optional<Copy> ArrowVerdict::witness(const Coloring& coloring) const {
  if (!instance) {
    return std::nullopt;
  }
  auto idx = instance->first_monochromatic(instance->colors_for(coloring));
  if (!idx) {
    return std::nullopt;
  }
  return instance->q_copies()[*idx];
}

ArrowVerdict check_arrow(std::shared_ptr<const ArrowInstance> instance, int num_colors,
                         const SearchLimits& limits) {
  ArrowVerdict verdict;
  auto coloring = find_proper_coloring(instance->p_copies().size(), instance->members(), num_colors,
                                       limits, &verdict.nodes);
  verdict.holds = !coloring.has_value();
  if (coloring) {
    if (instance->first_monochromatic(*coloring)) {
      throw Error(ErrorCode::kInvariantViolation, "counterexample colouring is not one");
    }
    verdict.counterexample = instance->make_coloring(std::move(*coloring), num_colors);
  }
  verdict.instance = std::move(instance);
  return verdict;
}

ArrowVerdict check_arrow(const RNGraph& target, const RNGraph& q, const RNGraph& p, int num_colors,
                         const SearchLimits& limits) {
  return check_arrow(std::make_shared<const ArrowInstance>(target, q, p), num_colors, limits);
}

ArrowVerdict check_arrow(const OrderedPoset& target, const OrderedPoset& q, const OrderedPoset& p,
                         int num_colors, const SearchLimits& limits) {
  return check_arrow(poset_to_complete_rn(target), poset_to_complete_rn(q), poset_to_complete_rn(p),
                     num_colors, limits);
}

std::optional<Copy> find_monochromatic(const RNGraph& target, const Coloring& coloring,
                                       const RNGraph& q, const RNGraph& p) {
  const ArrowInstance instance(target, q, p);
  auto idx = instance.first_monochromatic(instance.colors_for(coloring));
  if (!idx) {
    return std::nullopt;
  }
  return instance.q_copies()[*idx];
}

std::optional<Copy> find_monochromatic(const OrderedPoset& target, const Coloring& coloring,
                                       const OrderedPoset& q, const OrderedPoset& p) {
  return find_monochromatic(poset_to_complete_rn(target), coloring, poset_to_complete_rn(q),
                            poset_to_complete_rn(p));
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kOracleColors = 2;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t next = result * (n - k + i);
    if (next / (n - k + i) != result) {
      return UINT64_MAX;
    }
    result = next / i;
  }
  return result;
}

bool next_combination(std::vector<VertexId>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        comb[j] = comb[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

// Enumerates RN graphs on 0..n-1 (identity order) containing the pattern,
// each exactly once: the pattern is placed on a position set S and the
// remaining pairs run through {none, R, N} like an odometer; a candidate is
// kept only when S is its lexicographically first copy of the pattern.
class WitnessSearch {
 public:
  WitnessSearch(const BaseOracle& oracle, const RNGraph& a, const RNGraph& e)
      : oracle_(oracle), a_(a), pattern_(relabel_to_identity_order(e)) {
    a_in_e_ = count_copies(a_, pattern_);
    start_ = std::chrono::steady_clock::now();
  }

  OracleWitness run() {
    const std::size_t k = pattern_.size();
    if (k == 0 || a_in_e_ <= 1) {
      // Every copy of E is monochromatic; E itself is the smallest witness.
      ++examined_;
      return {pattern_, Certification::kCertified, examined_};
    }
    const std::uint64_t needed = static_cast<std::uint64_t>(kOracleColors) * (a_in_e_ - 1);
    for (std::size_t n = k; n <= oracle_.size_bound; ++n) {
      if (binomial(n, a_.size()) <= needed) {
        continue;  // some colour class can always avoid a full copy of E
      }
      if (auto found = search_level(n)) {
        return {std::move(*found), Certification::kCertified, examined_};
      }
    }
    throw Error(ErrorCode::kNotFoundWithinBounds,
                "no witness with at most " + std::to_string(oracle_.size_bound) + " vertices (|E|=" +
                    std::to_string(k) + ", " + std::to_string(a_in_e_) + " copies of A in E)");
  }

 private:
  std::optional<RNGraph> search_level(std::size_t n) {
    const std::size_t k = pattern_.size();
    if (n == k) {
      charge();
      if (certify(pattern_, false)) {
        return pattern_;
      }
      return std::nullopt;
    }
    std::vector<VertexId> placement(k);
    std::iota(placement.begin(), placement.end(), VertexId{0});
    do {
      std::vector<std::int64_t> slot(n, -1);
      for (std::size_t i = 0; i < k; ++i) {
        slot[placement[i]] = static_cast<std::int64_t>(i);
      }
      std::vector<Pair> fixed_r;
      std::vector<Pair> fixed_n;
      std::vector<Pair> free_pairs;
      for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
          if (slot[x] >= 0 && slot[y] >= 0) {
            const auto px = static_cast<VertexId>(slot[x]);
            const auto py = static_cast<VertexId>(slot[y]);
            if (pattern_.R().contains(px, py)) {
              fixed_r.emplace_back(x, y);
            } else if (pattern_.N().contains(px, py)) {
              fixed_n.emplace_back(x, y);
            }
          } else {
            free_pairs.emplace_back(x, y);
          }
        }
      }
      std::vector<std::uint8_t> state(free_pairs.size(), 0);
      while (true) {
        charge();
        std::vector<Pair> r = fixed_r;
        std::vector<Pair> nn = fixed_n;
        for (std::size_t i = 0; i < free_pairs.size(); ++i) {
          if (state[i] == 1) {
            r.push_back(free_pairs[i]);
          } else if (state[i] == 2) {
            nn.push_back(free_pairs[i]);
          }
        }
        RNGraph candidate = make_rn_graph(n, std::move(r), std::move(nn), identity_sequence(n));
        if (first_copy_is(candidate, placement) && certify(candidate, true)) {
          return candidate;
        }
        std::size_t i = state.size();
        while (i > 0) {
          --i;
          if (++state[i] < 3) {
            break;
          }
          state[i] = 0;
          if (i == 0) {
            i = state.size() + 1;  // wrapped around
            break;
          }
        }
        if (state.empty() || i == state.size() + 1) {
          break;
        }
      }
    } while (next_combination(placement, n));
    return std::nullopt;
  }

  bool first_copy_is(const RNGraph& candidate, const std::vector<VertexId>& placement) const {
    std::optional<std::vector<VertexId>> first;
    for_each_copy(pattern_, candidate, [&](const Copy& c) {
      first = c.image;
      return false;
    });
    return first && *first == placement;
  }

  // Levels below the current one hold no witness, so a witness at this
  // level has every vertex inside some copy of E (otherwise deleting an
  // uncovered vertex would give a smaller one).
  bool certify(const RNGraph& candidate, bool require_cover) const {
    auto instance = std::make_shared<const ArrowInstance>(candidate, pattern_, a_);
    if (instance->p_copies().size() <= static_cast<std::size_t>(kOracleColors) * (a_in_e_ - 1)) {
      return false;
    }
    if (require_cover) {
      std::vector<bool> covered(candidate.size(), false);
      for (const Copy& c : instance->q_copies()) {
        for (VertexId v : c.image) {
          covered[v] = true;
        }
      }
      if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        return false;
      }
    }
    return check_arrow(std::move(instance), kOracleColors, oracle_.limits).holds;
  }

  void charge() {
    if (++examined_ > oracle_.max_candidates) {
      throw Error(ErrorCode::kNotFoundWithinBounds,
                  "candidate budget of " + std::to_string(oracle_.max_candidates) + " exhausted");
    }
    if (oracle_.limits.time_limit && (examined_ & 255U) == 0 &&
        std::chrono::steady_clock::now() - start_ > *oracle_.limits.time_limit) {
      throw Error(ErrorCode::kResourceExceeded, "witness search exceeded its time limit");
    }
  }

  const BaseOracle& oracle_;
  const RNGraph& a_;
  RNGraph pattern_;
  std::size_t a_in_e_ = 0;
  std::uint64_t examined_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

OracleWitness oracle_ramsey(const BaseOracle& oracle, const RNGraph& a, const RNGraph& e) {
  switch (oracle.mode) {
    case OracleMode::kSearch:
      return WitnessSearch(oracle, a, e).run();
    case OracleMode::kFile: {
      if (!oracle.supplied) {
        throw Error(ErrorCode::kInvalidInput, "file oracle without a supplied witness");
      }
      try {
        const ArrowVerdict v = check_arrow(*oracle.supplied, e, a, kOracleColors, oracle.limits);
        if (!v.holds) {
          throw Error(ErrorCode::kCertificationFailed, "supplied structure does not arrow");
        }
        return {*oracle.supplied, Certification::kCertified, 1};
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kResourceExceeded) {
          throw;
        }
        return {*oracle.supplied, Certification::kConditional, 1};
      }
    }
    case OracleMode::kAssume:
      if (!oracle.supplied) {
        throw Error(ErrorCode::kInvalidInput, "assume oracle without a supplied witness");
      }
      return {*oracle.supplied, Certification::kAssumed, 0};
  }
  throw Error(ErrorCode::kInvalidInput, "unknown oracle mode");
}

}  // namespace oramsey
