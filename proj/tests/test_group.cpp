#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "ortho/error.hpp"
#include "ortho/group.hpp"

namespace ortho {
namespace {

std::vector<std::size_t> orders_of(const FiniteGroup& g) {
  auto span = g.element_orders();
  return {span.begin(), span.end()};
}

std::vector<Element> inverses_of(const FiniteGroup& g) {
  auto span = g.inverses();
  return {span.begin(), span.end()};
}

FiniteGroup product_of(const std::vector<std::size_t>& moduli) {
  FiniteGroup g = build_cyclic(moduli.front());
  for (std::size_t k = 1; k < moduli.size(); ++k) g = direct_product(g, build_cyclic(moduli[k]));
  return g;
}

TEST(BuildCyclic, TrivialGroup) {
  const FiniteGroup g = build_cyclic(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.mul(0, 0), 0u);
  EXPECT_EQ(inverses_of(g), std::vector<Element>{0});
  EXPECT_EQ(orders_of(g), std::vector<std::size_t>{1});
}

TEST(BuildCyclic, OrdersAndInverses) {
  EXPECT_EQ(orders_of(build_cyclic(4)), (std::vector<std::size_t>{1, 4, 2, 4}));
  EXPECT_EQ(inverses_of(build_cyclic(3)), (std::vector<Element>{0, 2, 1}));
}

TEST(BuildCyclic, RejectsZero) { EXPECT_THROW(build_cyclic(0), std::invalid_argument); }

TEST(DirectProduct, Z2xZ4OrderProfile) {
  const FiniteGroup g = direct_product(build_cyclic(2), build_cyclic(4));
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.elements_of_order(2).size(), 3u);
  EXPECT_EQ(g.elements_of_order(4).size(), 4u);
  // (u, v) sits at 4u + v.
  EXPECT_EQ(g.label(6), "(1,2)");
  EXPECT_EQ(g.element_order(0), 1u);
  EXPECT_EQ(g.element_order(1), 4u);
  EXPECT_EQ(g.element_order(6), 2u);
  EXPECT_EQ(g.mul(5, 7), 0 * 4 + 0u);  // (1,1)+(1,3) = (0,0)
  EXPECT_EQ(g.mul(5, 6), 3u);          // (1,1)+(1,2) = (0,3)
}

TEST(DirectProduct, TrivialFactorKeepsTable) {
  EXPECT_EQ(direct_product(build_cyclic(1), build_cyclic(3)), build_cyclic(3));
}

TEST(DirectProduct, Klein) {
  EXPECT_EQ(orders_of(direct_product(build_cyclic(2), build_cyclic(2))),
            (std::vector<std::size_t>{1, 2, 2, 2}));
}

TEST(ElementOrder, OutOfRange) {
  EXPECT_THROW(build_cyclic(4).element_order(4), std::out_of_range);
}

TEST(FromTable, RejectsNonLatin) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}, {"e", "a"}), std::invalid_argument);
}

TEST(FromTable, RejectsMisplacedIdentity) {
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}, {"a", "e"}), std::invalid_argument);
}

TEST(FromTable, RejectsNonAssociativeLoop) {
  // A Latin square with identity 0 that is not a group (order 5, yet 1*1 = 0).
  const std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(loop, {"0", "1", "2", "3", "4"}), std::invalid_argument);
}

TEST(FromTable, RejectsLabelMismatch) {
  EXPECT_THROW(FiniteGroup::from_table({{0}}, {}), std::invalid_argument);
}

TEST(FromTable, AssociativityFlag) {
  EXPECT_TRUE(build_cyclic(32).associativity_checked());
  EXPECT_FALSE(build_cyclic(33).associativity_checked());
}

TEST(GroupMap, FromCycles) {
  const GroupMap m = GroupMap::from_cycles(5, {{1, 3}, {2, 4, 0}});
  EXPECT_EQ(m.images, (std::vector<Element>{2, 3, 4, 1, 0}));
  EXPECT_THROW(GroupMap::from_cycles(3, {{1, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(GroupMap::from_cycles(3, {{1, 5}}), std::invalid_argument);
}

TEST(GroupMap, ComposeAndInverse) {
  const GroupMap f = GroupMap::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(compose(f, inverse(f)), GroupMap::identity(4));
  EXPECT_EQ(compose(f, f), GroupMap::from_cycles(4, {{1, 3, 2}}));
  EXPECT_THROW(inverse(GroupMap{{0, 0}}), std::invalid_argument);
}

TEST(Automorphisms, SmallCounts) {
  EXPECT_EQ(automorphisms(build_cyclic(1)).size(), 1u);
  EXPECT_EQ(automorphisms(build_cyclic(3)).size(), 2u);
  EXPECT_EQ(automorphisms(direct_product(build_cyclic(2), build_cyclic(4))).size(), 8u);
}

TEST(Automorphisms, BoundExceeded) {
  EXPECT_THROW(automorphisms(build_cyclic(13)), BoundExceeded);
  EXPECT_NO_THROW(automorphisms(build_cyclic(13), 13));
}

TEST(Automorphisms, NonHomomorphismRejected) {
  const FiniteGroup z4 = build_cyclic(4);
  EXPECT_TRUE(is_automorphism(z4, GroupMap{{0, 3, 2, 1}}));
  EXPECT_FALSE(is_automorphism(z4, GroupMap{{0, 2, 1, 3}}));
  EXPECT_FALSE(is_automorphism(z4, GroupMap{{0, 1, 2}}));
}

// Brute-force cross-check, sortedness, closure and order preservation on every
// product of cyclic groups up to order 8 (Z2^3 has 168 automorphisms).
class AutomorphismProperties : public ::testing::TestWithParam<std::vector<std::size_t>> {};

TEST_P(AutomorphismProperties, MatchesBruteForceAndFormsGroup) {
  const auto moduli = GetParam();
  const FiniteGroup g = product_of(moduli);
  const auto auts = automorphisms(g);

  std::vector<GroupMap> expected;
  for (auto& f : oracle::automorphisms(oracle::Abelian{moduli})) expected.push_back(GroupMap{f});
  EXPECT_EQ(auts, expected);
  EXPECT_TRUE(std::is_sorted(auts.begin(), auts.end()));

  const std::set<GroupMap> all(auts.begin(), auts.end());
  for (const auto& f : auts) {
    EXPECT_TRUE(all.contains(inverse(f)));
    for (const auto& h : auts) EXPECT_TRUE(all.contains(compose(f, h)));
    for (Element a = 0; a < g.order(); ++a) EXPECT_EQ(g.element_order(f(a)), g.element_order(a));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallAbelian, AutomorphismProperties,
                         ::testing::Values(std::vector<std::size_t>{1}, std::vector<std::size_t>{5},
                                           std::vector<std::size_t>{6}, std::vector<std::size_t>{2, 2},
                                           std::vector<std::size_t>{2, 4}, std::vector<std::size_t>{2, 2, 2},
                                           std::vector<std::size_t>{7}, std::vector<std::size_t>{4, 2}));

TEST(GroupInvariants, RandomProductsSatisfyTableLaws) {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> factor(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> moduli{factor(rng), factor(rng)};
    if (trial % 3 == 0) moduli.push_back(factor(rng) % 3 + 1);
    const FiniteGroup g = product_of(moduli);
    const oracle::Abelian ref{moduli};
    ASSERT_EQ(g.order(), ref.order());
    for (Element a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
      EXPECT_EQ(g.element_order(a), ref.element_order(a));
      EXPECT_EQ(g.order() % g.element_order(a), 0u);
      for (Element b = 0; b < g.order(); ++b) EXPECT_EQ(g.mul(a, b), ref.add(a, b));
    }
  }
}

}  // namespace
}  // namespace ortho
