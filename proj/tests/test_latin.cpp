#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ortho/graph.hpp"
#include "ortho/latin.hpp"

namespace ortho {
namespace {

using Cells = std::vector<std::vector<std::size_t>>;

TEST(LatinSquare, TrivialGroup) {
  const auto g = fixtures::group(1);
  const LatinSquare l = to_latin_square(*g, GroupMap::identity(1));
  EXPECT_EQ(l.order(), 1u);
  EXPECT_EQ(l(0, 0), 0u);
}

TEST(LatinSquare, CayleyTableIsLatin) {
  const auto g = fixtures::z2xz4();
  const LatinSquare cayley = to_latin_square(*g, GroupMap::identity(8));
  for (Element i = 0; i < 8; ++i)
    for (Element j = 0; j < 8; ++j) EXPECT_EQ(cayley(i, j), g->mul(i, j));
}

TEST(LatinSquare, ThetaStarIsOrthogonalToCayleyTable) {
  const auto g = fixtures::z2xz4();
  const LatinSquare cayley = to_latin_square(*g, GroupMap::identity(8));
  EXPECT_TRUE(latin_orthogonal(cayley, to_latin_square(*g, fixtures::kThetaStar)));
}

TEST(LatinSquare, SelfAndPartner) {
  const auto g = fixtures::z2xz4();
  const LatinSquare star = to_latin_square(*g, fixtures::kThetaStar);
  EXPECT_FALSE(latin_orthogonal(star, star));
  EXPECT_TRUE(latin_orthogonal(star, to_latin_square(*g, fixtures::kPsi1)));
}

TEST(LatinSquare, Validation) {
  EXPECT_THROW(LatinSquare(Cells{{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(LatinSquare(Cells{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(latin_orthogonal(LatinSquare(Cells{{0}}), LatinSquare(Cells{{0, 1}, {1, 0}})), std::invalid_argument);
  EXPECT_THROW(to_latin_square(*fixtures::group(3), GroupMap{{0, 0, 0}}), std::invalid_argument);
}

TEST(LatinSquare, TextExport) {
  const auto g = fixtures::group(3);
  EXPECT_EQ(to_text(to_latin_square(*g, GroupMap{{0, 2, 1}})), "0 2 1\n1 0 2\n2 1 0\n");
}

// The Latin-square route and the difference-map route agree on every pair.
class LatinOracle : public ::testing::TestWithParam<std::vector<std::size_t>> {};

TEST_P(LatinOracle, AgreesWithOrthogonality) {
  const auto moduli = GetParam();
  const auto g = moduli.size() == 1 ? fixtures::group(moduli[0]) : fixtures::group(moduli[0], moduli[1]);
  const auto orths = enumerate_orthomorphisms(g);
  const LatinSquare cayley = to_latin_square(*g, GroupMap::identity(g->order()));
  std::vector<LatinSquare> squares;
  for (const auto& t : orths) {
    squares.push_back(to_latin_square(*g, t.map()));
    EXPECT_TRUE(is_latin(squares.back().cells()));
    EXPECT_TRUE(latin_orthogonal(cayley, squares.back()));
  }
  for (std::size_t i = 0; i < orths.size(); ++i)
    for (std::size_t j = 0; j < orths.size(); ++j)
      if (i != j) {
        EXPECT_EQ(latin_orthogonal(squares[i], squares[j]), are_orthogonal(orths[i], orths[j]));
      }
}

INSTANTIATE_TEST_SUITE_P(Groups, LatinOracle,
                         ::testing::Values(std::vector<std::size_t>{2, 4}, std::vector<std::size_t>{2, 2},
                                           std::vector<std::size_t>{3}, std::vector<std::size_t>{5},
                                           std::vector<std::size_t>{7}, std::vector<std::size_t>{3, 3}));

}  // namespace
}  // namespace ortho
