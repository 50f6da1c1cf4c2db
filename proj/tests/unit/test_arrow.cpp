#include <gtest/gtest.h>

#include "oramsey/analysis.hpp"
#include "oramsey/arrow.hpp"
#include "test_util.hpp"

namespace oramsey {
namespace {

using testing::error_code_of;

RNGraph rn(const OrderedPoset& p) { return poset_to_complete_rn(p); }

TEST(Arrow, ChainsHoldAndFailAtTheThreshold) {
  EXPECT_TRUE(check_arrow(chain(6), chain(3), chain(2), 2).holds);
  EXPECT_TRUE(check_arrow(chain(7), chain(3), chain(2), 2).holds);
  const ArrowVerdict v = check_arrow(chain(5), chain(3), chain(2), 2);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.counterexample);
  EXPECT_EQ(v.counterexample->size(), 10u);
  EXPECT_FALSE(find_monochromatic(chain(5), *v.counterexample, chain(3), chain(2)));
}

TEST(Arrow, AntichainsOnPoints) {
  EXPECT_TRUE(check_arrow(antichain(3), antichain(2), chain(1), 2).holds);
  EXPECT_FALSE(check_arrow(antichain(2), antichain(2), chain(1), 2).holds);
}

TEST(Arrow, TwoChainOverPointsWithThreeColours) {
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(check_arrow(chain(n), chain(2), chain(1), 3).holds, n >= 4) << n;
  }
}

TEST(Arrow, OneColourHoldsIffQOccurs) {
  EXPECT_TRUE(check_arrow(chain(3), chain(2), chain(1), 1).holds);
  EXPECT_FALSE(check_arrow(antichain(3), chain(2), chain(1), 1).holds);
}

TEST(Arrow, AgreesWithBruteForce) {
  testing::Rng rng(101);
  int holds = 0;
  int fails = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const RNGraph target = testing::random_rn_graph(rng, 3 + trial % 4, 0.5, 0.3);
    const RNGraph q = testing::random_rn_graph(rng, 2 + trial % 2, 0.5, 0.3);
    const RNGraph p = testing::random_rn_graph(rng, 1 + trial % 2, 0.5, 0.3);
    if (count_copies(p, target) > 16) {
      continue;
    }
    const bool expect = testing::brute_arrow(target, q, p, 2);
    const ArrowVerdict v = check_arrow(target, q, p, 2);
    EXPECT_EQ(v.holds, expect) << trial;
    (expect ? holds : fails) += 1;
    if (!v.holds) {
      ASSERT_TRUE(v.counterexample);
      EXPECT_FALSE(find_monochromatic(target, *v.counterexample, q, p));
    }
  }
  EXPECT_GT(holds, 0);
  EXPECT_GT(fails, 0);
}

TEST(Arrow, WitnessesForEveryColouringWhenItHolds) {
  const ArrowVerdict v = check_arrow(chain(6), chain(3), chain(2), 2);
  ASSERT_TRUE(v.holds);
  testing::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Coloring c = testing::random_coloring(*v.instance, 2, rng);
    const auto w = v.witness(c);
    ASSERT_TRUE(w);
    const auto mono = find_monochromatic(chain(6), c, chain(3), chain(2));
    ASSERT_TRUE(mono);
    EXPECT_EQ(mono->image, w->image);
  }
  const auto greedy = v.witness(testing::greedy_adversary(*v.instance, 2));
  EXPECT_TRUE(greedy);
}

TEST(Arrow, ConstantColouringGivesTheFirstCopy) {
  const ArrowVerdict v = check_arrow(chain(6), chain(3), chain(2), 2);
  const Coloring c = v.instance->make_coloring(std::vector<int>(15, 1), 2);
  const auto w = v.witness(c);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->image, (std::vector<VertexId>{0, 1, 2}));
}

TEST(Arrow, NodeLimitRaisesResourceExceeded) {
  SearchLimits tiny;
  tiny.max_nodes = 1;
  tiny.sample_prepass = 0;
  EXPECT_EQ(error_code_of([&] { check_arrow(chain(6), chain(3), chain(2), 2, tiny); }),
            ErrorCode::kResourceExceeded);
}

TEST(Arrow, InstanceIndexesImages) {
  const ArrowInstance inst(rn(chain(4)), rn(chain(3)), rn(chain(2)));
  EXPECT_EQ(inst.p_copies().size(), 6u);
  EXPECT_EQ(inst.q_copies().size(), 4u);
  for (const auto& m : inst.members()) {
    EXPECT_EQ(m.size(), 3u);
  }
  EXPECT_EQ(inst.index_of({0, 3}), 2u);
  EXPECT_FALSE(inst.index_of({3, 0}));
  const Coloring partial({{0, 1}}, {0}, 2);
  EXPECT_EQ(error_code_of([&] { inst.colors_for(partial); }), ErrorCode::kInvalidInput);
}

TEST(Coloring, ValidatesInput) {
  EXPECT_EQ(error_code_of([] { Coloring({{0}}, {2}, 2); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(error_code_of([] { Coloring({{0}, {0}}, {0, 1}, 2); }), ErrorCode::kInvalidInput);
  const Coloring c({{2}, {0}}, {1, 0}, 2);
  EXPECT_EQ(c.images().front(), (std::vector<VertexId>{0}));
  EXPECT_EQ(c.color_of({2}), 1);
  EXPECT_FALSE(c.color_of({1}));
}

TEST(ProperColoring, EdgeCases) {
  const SearchLimits limits;
  EXPECT_EQ(find_proper_coloring(3, {}, 2, limits), (std::vector<int>{0, 0, 0}));
  EXPECT_FALSE(find_proper_coloring(3, {{1}}, 2, limits));
  EXPECT_FALSE(find_proper_coloring(3, {{0, 1}}, 1, limits));
  EXPECT_EQ(error_code_of([&] { find_proper_coloring(3, {}, 0, limits); }), ErrorCode::kInvalidInput);
  // Triangle: not 2-colourable, 3-colourable.
  const std::vector<std::vector<std::size_t>> tri{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_FALSE(find_proper_coloring(3, tri, 2, limits));
  const auto c = find_proper_coloring(3, tri, 3, limits);
  ASSERT_TRUE(c);
  EXPECT_NE((*c)[0], (*c)[1]);
  EXPECT_NE((*c)[1], (*c)[2]);
  EXPECT_NE((*c)[0], (*c)[2]);
}

TEST(Certification, CombineKeepsTheWeakest) {
  EXPECT_EQ(combine(Certification::kCertified, Certification::kConditional), Certification::kConditional);
  EXPECT_EQ(combine(Certification::kAssumed, Certification::kConditional), Certification::kAssumed);
  EXPECT_EQ(combine(Certification::kCertified, Certification::kCertified), Certification::kCertified);
}

TEST(Oracle, SearchFindsSmallestWitnesses) {
  const BaseOracle oracle;
  const OracleWitness point = oracle_ramsey(oracle, rn(chain(1)), rn(chain(1)));
  EXPECT_EQ(point.graph.size(), 1u);

  const OracleWitness w = oracle_ramsey(oracle, rn(chain(1)), rn(chain(2)));
  EXPECT_EQ(w.certification, Certification::kCertified);
  EXPECT_EQ(relabel_to_identity_order(w.graph), rn(chain(3)));

  const OracleWitness w2 = oracle_ramsey(oracle, rn(chain(2)), rn(chain(3)));
  EXPECT_EQ(relabel_to_identity_order(w2.graph), rn(chain(6)));
  EXPECT_TRUE(check_arrow(w2.graph, rn(chain(3)), rn(chain(2)), 2).holds);
}

TEST(Oracle, SearchGivesUpAtTheSizeBound) {
  BaseOracle oracle;
  oracle.size_bound = 5;
  EXPECT_EQ(error_code_of([&] { oracle_ramsey(oracle, rn(chain(2)), rn(chain(3))); }),
            ErrorCode::kNotFoundWithinBounds);
}

TEST(Oracle, FileAndAssumeModes) {
  BaseOracle oracle;
  oracle.mode = OracleMode::kFile;
  EXPECT_EQ(error_code_of([&] { oracle_ramsey(oracle, rn(chain(2)), rn(chain(3))); }),
            ErrorCode::kInvalidInput);

  oracle.supplied = rn(chain(6));
  EXPECT_EQ(oracle_ramsey(oracle, rn(chain(2)), rn(chain(3))).certification, Certification::kCertified);

  oracle.supplied = rn(chain(5));
  EXPECT_EQ(error_code_of([&] { oracle_ramsey(oracle, rn(chain(2)), rn(chain(3))); }),
            ErrorCode::kCertificationFailed);

  oracle.supplied = rn(chain(6));
  oracle.limits.max_nodes = 1;
  oracle.limits.sample_prepass = 0;
  EXPECT_EQ(oracle_ramsey(oracle, rn(chain(2)), rn(chain(3))).certification, Certification::kConditional);

  oracle.mode = OracleMode::kAssume;
  oracle.supplied = rn(chain(5));
  const OracleWitness assumed = oracle_ramsey(oracle, rn(chain(2)), rn(chain(3)));
  EXPECT_EQ(assumed.certification, Certification::kAssumed);
  EXPECT_EQ(assumed.graph, rn(chain(5)));
}

}  // namespace
}  // namespace oramsey
