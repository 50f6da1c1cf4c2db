#include <gtest/gtest.h>

#include "oramsey/analysis.hpp"
#include "test_util.hpp"

namespace oramsey {
namespace {

using testing::error_code_of;

RNGraph path_with_n() { return make_rn_graph(3, {{0, 1}, {1, 2}}, {{0, 2}}, {0, 1, 2}); }

TEST(Quasicycle, PathWithClosingNEdge) {
  const auto q = find_bad_quasicycle(path_with_n());
  ASSERT_TRUE(q);
  EXPECT_EQ(q->vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(q->length(), 3u);
}

TEST(Quasicycle, NoneWhenPathMissesTheNTarget) {
  const RNGraph g = make_rn_graph(4, {{0, 1}, {1, 2}, {0, 2}}, {{0, 3}}, {0, 1, 2, 3});
  EXPECT_FALSE(find_bad_quasicycle(g));
}

TEST(Quasicycle, NoneInPosetExpansions) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    EXPECT_FALSE(find_bad_quasicycle(poset_to_complete_rn(testing::random_poset(rng, 1 + trial % 9))));
  }
}

TEST(Quasicycle, ShortestWinsThenLexicographicallyLeast) {
  // 0,1,2,3 closes with N(0,3) at length 4; N(1,5) closes two length-3
  // routes, 1,2,5 and 1,4,5.
  const RNGraph g = make_rn_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {2, 5}}, {{0, 3}, {1, 5}},
                                  identity_sequence(6));
  const auto q = find_bad_quasicycle(g);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->vertices, (std::vector<VertexId>{1, 2, 5}));
  EXPECT_FALSE(find_bad_quasicycle(g, 2));
  EXPECT_TRUE(find_bad_quasicycle(g, 3));
}

TEST(EllRN, ExamplesAndDomain) {
  EXPECT_TRUE(is_ell_rn(path_with_n(), 2));
  EXPECT_FALSE(is_ell_rn(path_with_n(), 3));
  EXPECT_EQ(max_ell_rn(path_with_n()), 2u);
  EXPECT_EQ(error_code_of([] { is_ell_rn(path_with_n(), 1); }), ErrorCode::kInvalidInput);
  const RNGraph good = poset_to_complete_rn(chain(4));
  for (std::size_t ell = 2; ell < 10; ++ell) {
    EXPECT_TRUE(is_ell_rn(good, ell));
  }
  EXPECT_FALSE(max_ell_rn(good));
}

TEST(EllRN, EveryGraphIsTwoRN) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    EXPECT_TRUE(is_ell_rn(testing::random_rn_graph(rng, 1 + trial % 9, 0.4, 0.4), 2));
  }
}

TEST(Goodness, Examples) {
  EXPECT_TRUE(is_good(poset_to_complete_rn(make_ordered_poset(3, {{0, 2}, {1, 2}}, {0, 1, 2}))));
  EXPECT_FALSE(is_good(path_with_n()));
  EXPECT_TRUE(is_good(make_rn_graph(3, {{0, 1}}, {{1, 2}}, {0, 1, 2})));
}

TEST(Goodness, AgreesWithExhaustivePathSearch) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const RNGraph g = testing::random_rn_graph(rng, 1 + trial % 9, 0.35, 0.25);
    const auto brute = testing::brute_shortest_bad_quasicycle(g);
    EXPECT_EQ(is_good(g), !brute.has_value());
    const auto q = find_bad_quasicycle(g);
    ASSERT_EQ(q.has_value(), brute.has_value());
    if (q) {
      EXPECT_EQ(q->length(), *brute);
      for (std::size_t i = 0; i + 1 < q->vertices.size(); ++i) {
        EXPECT_TRUE(g.R().contains(q->vertices[i], q->vertices[i + 1]));
      }
      EXPECT_TRUE(g.N().contains(q->vertices.front(), q->vertices.back()));
    }
  }
}

TEST(Closure, Examples) {
  const Relation c = transitive_closure(Relation(3, {{0, 1}, {1, 2}}), 3);
  EXPECT_EQ(std::vector<Pair>(c.pairs().begin(), c.pairs().end()),
            (std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(transitive_closure(Relation(4, {}), 4).empty());
  const Relation d = transitive_closure(Relation(4, {{0, 1}, {1, 2}, {2, 3}}), 4);
  EXPECT_EQ(d.size(), 6u);
  EXPECT_TRUE(d.contains(0, 3));
}

TEST(Closure, DetectsCycles) {
  EXPECT_EQ(error_code_of([] { transitive_closure(Relation(3, {{0, 1}, {1, 2}, {2, 0}}), 3); }),
            ErrorCode::kCycleDetected);
}

TEST(Closure, MatchesFloydWarshallAndIsIdempotentAndMonotone) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const RNGraph g = testing::random_rn_graph(rng, n, 0.3, 0.0);
    const Relation c = transitive_closure(g.R(), n);
    const auto expect = testing::closure_pairs(n, g.R().pairs());
    EXPECT_EQ(std::set<Pair>(c.pairs().begin(), c.pairs().end()), expect);
    EXPECT_EQ(transitive_closure(c, n), c);
    std::vector<Pair> sub(g.R().pairs().begin(), g.R().pairs().end());
    if (!sub.empty()) {
      sub.pop_back();
    }
    const Relation cs = transitive_closure(Relation(n, sub), n);
    for (const Pair& p : cs.pairs()) {
      EXPECT_TRUE(c.contains(p.first, p.second));
    }
  }
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_r_path_vertices(make_rn_graph(3, {}, {}, {0, 1, 2})), 1u);
  EXPECT_EQ(longest_r_path_vertices(poset_to_complete_rn(chain(4))), 4u);
  EXPECT_EQ(longest_r_path_vertices(make_rn_graph(4, {{0, 1}, {0, 2}, {2, 3}}, {}, {0, 1, 2, 3})), 3u);
}

TEST(Homomorphism, Examples) {
  const RNGraph g = path_with_n();
  EXPECT_TRUE(check_homomorphism(identity_homomorphism(3), g, g));
  const RNGraph edge = poset_to_complete_rn(chain(2));
  const RNGraph empty = make_rn_graph(2, {}, {}, {0, 1});
  EXPECT_FALSE(check_homomorphism(identity_homomorphism(2), edge, empty));
  EXPECT_FALSE(check_homomorphism(Homomorphism{{0, 5}}, edge, edge));
}

TEST(Homomorphism, CompositionsStayHomomorphisms) {
  // Two collapses ending on a 2-chain.
  const RNGraph c4 = make_rn_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {}, {0, 1, 2, 3});
  const RNGraph c3 = make_rn_graph(3, {{0, 1}, {0, 2}}, {}, {0, 1, 2});
  const RNGraph c2 = poset_to_complete_rn(chain(2));
  const Homomorphism h1{{0, 0, 1, 2}};
  const Homomorphism h2{{0, 1, 1}};
  ASSERT_TRUE(check_homomorphism(h1, c4, c3));
  ASSERT_TRUE(check_homomorphism(h2, c3, c2));
  EXPECT_TRUE(check_homomorphism(compose(h2, h1), c4, c2));
  EXPECT_TRUE(is_weakly_monotone(compose(h2, h1), c4, c2));
  EXPECT_FALSE(is_weakly_monotone(Homomorphism{{1, 0, 0, 0}}, c4, c2));
}

}  // namespace
}  // namespace oramsey
