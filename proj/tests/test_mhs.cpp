#include <gtest/gtest.h>

#include "support.hpp"

namespace qmhs {
namespace {

CycloElem elem(int n, std::vector<Rational> c) { return CycloElem(CycloField::get(n), c); }

TEST(Index, Statistics) {
  const Index k{3, 1, 2, 1};
  EXPECT_EQ(k.weight(), 7);
  EXPECT_EQ(k.depth(), 4);
  EXPECT_EQ(k.height(), 2);
  EXPECT_TRUE(k.admissible());
  EXPECT_FALSE(Index({1, 2}).admissible());
  EXPECT_EQ(Index::parse("3,1,2,1"), k);
  EXPECT_EQ(Index::parse(k.to_string()), k);
  EXPECT_THROW(Index::parse("2,0"), std::invalid_argument);
  EXPECT_THROW(Index::parse("a"), std::invalid_argument);
}

TEST(Index, EnumerateExamples) {
  EXPECT_EQ(enumerate(3, 2), (std::vector<Index>{Index{2, 1}, Index{1, 2}}));
  EXPECT_EQ(enumerate(2, 1, 1), (std::vector<Index>{Index{2}}));
  EXPECT_EQ(enumerate(4, 2).size(), 3u);
  EXPECT_TRUE(enumerate(2, 3).empty());
}

TEST(Index, EnumerateCounts) {
  for (int k = 1; k <= 10; ++k)
    for (int r = 1; r <= k; ++r) {
      const auto all = enumerate(k, r);
      EXPECT_EQ(Integer(static_cast<long>(all.size())), binomial(k - 1, r - 1));
      std::size_t by_height = 0, admissible = 0;
      for (int s = 0; s <= r; ++s) {
        const auto slice = enumerate(IndexProfile{k, r, s});
        for (const auto& idx : slice) EXPECT_EQ(idx.height(), s);
        by_height += slice.size();
      }
      EXPECT_EQ(by_height, all.size());
      for (const auto& idx : all) {
        EXPECT_EQ(idx.weight(), k);
        EXPECT_EQ(idx.depth(), r);
        admissible += idx.admissible();
      }
      EXPECT_EQ(enumerate(k, r, std::nullopt, true).size(), admissible);
    }
}

TEST(NestedSum, Examples) {
  EXPECT_EQ(z(Index{2}, 4), elem(4, {0, Rational(5, 2)}));
  EXPECT_EQ(z(Index{1, 1}, 3), elem(3, {0, -1}));
  EXPECT_EQ(z(Index{1}, 2), elem(2, {1}));
  EXPECT_TRUE(z(Index{1, 1, 1}, 3).is_zero());
  EXPECT_EQ(z_star(Index{1, 1}, 3), elem(3, {0, -2}));
  EXPECT_EQ(z_star(Index{2}, 4), elem(4, {0, Rational(5, 2)}));
  EXPECT_EQ(z(Index(std::vector<int>{}), 5), elem(5, {1}));
}

TEST(NestedSum, MatchesChainEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    ExactBackend backend(n);
    for (int k = 1; k <= 5; ++k)
      for (int r = 1; r <= k; ++r)
        for (const Index& idx : enumerate(k, r))
          for (Chain chain : {Chain::strict, Chain::nonstrict})
            EXPECT_EQ(nested_sum(idx, backend, chain), testing::chain_sum(idx, n, chain))
                << "n=" << n << " index=" << idx.to_string() << " star=" << (chain == Chain::nonstrict);
  }
}

TEST(NestedSum, EdgeCases) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(z(repeated(1, n), n).is_zero());
    EXPECT_TRUE(z(repeated(2, n + 1), n).is_zero());
    EXPECT_FALSE(z_star(Index{1}, n).is_zero());
  }
}

TEST(NestedSum, DepthOneStarAgreement) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(z(Index{k}, n), z_star(Index{k}, n)) << n << "," << k;
}

TEST(Zbar, Examples) {
  EXPECT_EQ(zbar(Index{1, 1}, 3), CycloElem(CycloField::get(3), {Rational(1, 3)}));
  EXPECT_EQ(zbar(Index{2}, 4), CycloElem(CycloField::get(4), {Rational(-5, 4)}));
  EXPECT_EQ(zbar(Index{3}, 2), CycloElem(CycloField::get(2), {Rational(1, 8)}));
}

TEST(Zbar, RepeatedIndicesAreRational) {
  for (int n = 2; n <= 12; ++n) {
    ExactBackend backend(n);
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= 5; ++r) EXPECT_TRUE(zbar(repeated(k, r), backend).is_rational()) << n << "," << k << "," << r;
  }
}

TEST(ProfileSum, Examples) {
  EXPECT_EQ(profile_sum(IndexProfile{1, 1, 0}, 3), 1);
  EXPECT_EQ(profile_sum(IndexProfile{2, 2, 0}, 3), Rational(1, 3));
  EXPECT_EQ(profile_sum(IndexProfile{2, 1, 1}, 2), Rational(-1, 4));
}

TEST(ProfileSum, NonRationalIndexIsNotMistakenForRational) {
  // A single index of a multi-index profile need not be rational.
  EXPECT_FALSE(zbar(Index{2, 1}, 5).is_rational());
  EXPECT_NO_THROW(profile_sum(IndexProfile{3, 2, 1}, 5));
}

TEST(ComplexBackend, MatchesExactRendering) {
  for (int n : {2, 3, 7, 16}) {
    ExactBackend exact(n);
    ComplexBackend numeric(n);
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r)
        for (const Index& idx : enumerate(k, r))
          for (Chain chain : {Chain::strict, Chain::nonstrict})
            EXPECT_LT(std::abs(nested_sum(idx, numeric, chain) - to_complex(nested_sum(idx, exact, chain))), 1e-10);
  }
}

}  // namespace
}  // namespace qmhs
