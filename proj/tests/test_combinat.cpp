#include <gtest/gtest.h>

#include <set>

#include "chroma/combinat.hpp"
#include "chroma/errors.hpp"
#include "helpers.hpp"

using namespace chroma;
using chroma::testing::isomorphic;

TEST(Partitions, SmallCases) {
  ASSERT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  const std::vector<Partition> three{{3}, {2, 1}, {1, 1, 1}};
  EXPECT_EQ(partitions_of(3), three);
  EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(Partitions, CountsMatchBruteForce) {
  // weakly decreasing compositions, counted by recursion on the largest part
  std::function<int(int, int)> count = [&](int n, int cap) {
    if (n == 0) return 1;
    int total = 0;
    for (int p = std::min(n, cap); p >= 1; --p) total += count(n - p, p);
    return total;
  };
  for (int n = 0; n <= 12; ++n) {
    const auto ps = partitions_of(n);
    EXPECT_EQ(static_cast<int>(ps.size()), count(n, n)) << n;
    std::set<Partition> distinct(ps.begin(), ps.end());
    EXPECT_EQ(distinct.size(), ps.size());
    for (const auto& p : ps) EXPECT_EQ(p.weight(), n);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  }
}

TEST(Partitions, RejectsIncreasingOrNonPositive) {
  EXPECT_THROW(Partition({1, 2}), BadParameter);
  EXPECT_THROW(Partition({2, 0}), BadParameter);
  EXPECT_EQ(Partition::from_parts({1, 0, 3, 2}), Partition({3, 2, 1}));
  EXPECT_EQ(Partition::parse("4,4,3,2"), Partition({4, 4, 3, 2}));
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_THROW(Partition::parse("2,x"), ParseError);
}

TEST(Conjugate, Examples) {
  EXPECT_TRUE(Partition().conjugate().empty());
  EXPECT_EQ(Partition({5}).conjugate(), Partition({1, 1, 1, 1, 1}));
  EXPECT_EQ(Partition({4, 4, 3, 2}).conjugate(), Partition({4, 4, 3, 2}));
  EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
}

TEST(Conjugate, IsAWeightPreservingInvolution) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) {
      const auto c = p.conjugate();
      EXPECT_EQ(c.weight(), p.weight());
      EXPECT_EQ(c.conjugate(), p);
      EXPECT_EQ(c.length(), p[0]);
    }
  }
}

TEST(Uio, ParseExamples) {
  const auto anti = UnitIntervalOrder::parse("3,3");
  EXPECT_TRUE(anti.incomparable(0, 1));
  const auto chain = UnitIntervalOrder::parse("2,3");
  EXPECT_TRUE(chain.precedes(0, 1));
  EXPECT_FALSE(chain.precedes(1, 0));

  const auto u8 = UnitIntervalOrder::parse("3,4,5,6,7,8,9,9");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) EXPECT_EQ(u8.precedes(i, j), j >= i + 2) << i << ' ' << j;
}

TEST(Uio, MalformedNext) {
  EXPECT_THROW(UnitIntervalOrder::parse("1,3"), MalformedNext);   // next(i) <= i
  EXPECT_THROW(UnitIntervalOrder::parse("3,2,4"), MalformedNext); // decreasing
  EXPECT_THROW(UnitIntervalOrder::parse("2,4"), MalformedNext);   // past n+1
  EXPECT_THROW(UnitIntervalOrder::parse("a,b"), ParseError);
}

TEST(Uio, FromPoints) {
  const std::vector<Rational> pair{Rational(0), Rational(1, 2)};
  EXPECT_EQ(UnitIntervalOrder::from_points(pair).str(), "3,3");

  std::vector<Rational> halves;
  for (int i = 1; i <= 8; ++i) halves.emplace_back(i, 2);
  EXPECT_EQ(UnitIntervalOrder::from_points(halves).str(), "3,4,5,6,7,8,9,9");

  std::vector<Rational> thirds;
  for (int i = 1; i <= 5; ++i) thirds.emplace_back(i, 3);
  EXPECT_EQ(UnitIntervalOrder::from_points(thirds), uio_family(5, 2));
  EXPECT_EQ(uio_family(5, 2).str(), "4,5,6,6,6");
}

TEST(Uio, RealizeExamples) {
  const auto p = UnitIntervalOrder::parse("3,4,4").realize();
  ASSERT_EQ(p.size(), 3u);
  EXPECT_GE(p[2], p[0] + 1);
  EXPECT_LT(p[1], p[0] + 1);
  EXPECT_LT(p[2], p[1] + 1);
}

TEST(Uio, RealizeRoundTripsEverywhere) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& u : enumerate_uios(n)) {
      const auto pts = u.realize();
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      EXPECT_EQ(UnitIntervalOrder::from_points(pts), u) << u.str();
    }
}

TEST(Uio, EnumerationIsCatalan) {
  EXPECT_EQ(enumerate_uios(1).size(), 1u);
  std::vector<std::string> three;
  for (const auto& u : enumerate_uios(3)) three.push_back(u.str());
  EXPECT_EQ(three, (std::vector<std::string>{"2,3,4", "2,4,4", "3,3,4", "3,4,4", "4,4,4"}));
  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_uios(n);
    EXPECT_EQ(BigInt(all.size()), catalan(n)) << n;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
  EXPECT_EQ(enumerate_uios(6).size(), 132u);
}

TEST(Uio, FamilyMatchesDefinition) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k) {
      std::vector<Rational> pts;
      for (int i = 1; i <= n; ++i) pts.emplace_back(i, k + 1);
      EXPECT_EQ(uio_family(n, k), UnitIntervalOrder::from_points(pts));
    }
}

TEST(IncGraph, Examples) {
  EXPECT_EQ(inc_graph(UnitIntervalOrder::parse("2,3")).edge_count(), 0);
  EXPECT_EQ(inc_graph(Poset::antichain(5)), Graph::complete(5));
  const auto g = inc_graph(UnitIntervalOrder::parse("3,4,5,6,7,8,9,9"));
  EXPECT_EQ(g, Graph::path(8));
}

TEST(AbFree, Examples) {
  const auto two_two = Poset::chain(2).disjoint_union(Poset::chain(2));
  EXPECT_FALSE(is_ab_free(two_two, 2, 2));
  EXPECT_TRUE(is_ab_free(two_two, 3, 1));
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(is_ab_free(Poset::chain(n), 2, 2));
  const auto three_one = Poset::chain(3).disjoint_union(Poset::antichain(1));
  EXPECT_FALSE(is_ab_free(three_one, 3, 1));
  EXPECT_FALSE(uio_recognize(three_one).has_value());
  EXPECT_FALSE(uio_recognize(two_two).has_value());
}

TEST(AbFree, UiosAreFree) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& u : enumerate_uios(n)) {
      EXPECT_TRUE(is_ab_free(u.poset(), 2, 2)) << u.str();
      EXPECT_TRUE(is_ab_free(u.poset(), 3, 1)) << u.str();
    }
}

TEST(Recognize, Chain) {
  const auto u = uio_recognize(Poset::chain(3));
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(u->str(), "2,3,4");
}

// Scott-Suppes in both directions, with the recognized order checked to be
// isomorphic to the input.
TEST(Recognize, ScottSuppesUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_natural_posets(n)) {
      const bool free = is_ab_free(p, 2, 2) && is_ab_free(p, 3, 1);
      const auto u = uio_recognize(p);
      EXPECT_EQ(u.has_value(), free);
      if (u) EXPECT_TRUE(isomorphic(u->poset(), p)) << u->str();
    }
}

TEST(Recognize, PermutedInputs) {
  // relabelling must not matter
  const std::vector<int> perm{3, 0, 4, 1, 2};
  for (const auto& u : enumerate_uios(5)) {
    const auto p = u.poset().relabel(perm);
    const auto back = uio_recognize(p);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, u);
  }
}

TEST(NaturalPosets, CoverEveryIsoClass) {
  // unlabelled posets on n points: 1, 2, 5, 16, 63
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Poset> reps;
    for (const auto& p : enumerate_natural_posets(n)) {
      bool seen = false;
      for (const auto& r : reps) seen = seen || isomorphic(r, p);
      if (!seen) reps.push_back(p);
    }
    EXPECT_EQ(reps.size(), expected[static_cast<std::size_t>(n - 1)]) << n;
  }
}

TEST(ClanGraph, Examples) {
  const std::vector<int> ones{1, 1, 1, 1};
  const auto g = Graph::path(4);
  EXPECT_EQ(clan_graph(g, ones), g);
  EXPECT_EQ(clan_graph(Graph::complete(1), std::vector<int>{3}), Graph::complete(3));
  EXPECT_EQ(clan_graph(Graph::complete(2), std::vector<int>{2, 1}), Graph::complete(3));
  const auto blown = clan_graph(Graph::edgeless(2), std::vector<int>{2, 2});
  EXPECT_EQ(blown.edge_count(), 2);
  EXPECT_EQ(clan_graph(g, std::vector<int>{1, 0, 1, 1}).size(), 3);
}

TEST(ClanGraph, EdgeCountFormula) {
  const auto g = Graph::path(3);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const auto h = clan_graph(g, std::vector<int>{a, b, c});
        EXPECT_EQ(h.size(), a + b + c);
        const int within = a * (a - 1) / 2 + b * (b - 1) / 2 + c * (c - 1) / 2;
        EXPECT_EQ(h.edge_count(), within + a * b + b * c);
      }
}

TEST(Graphs, EnumerationCount) {
  EXPECT_EQ(enumerate_graphs(1).size(), 1u);
  EXPECT_EQ(enumerate_graphs(4).size(), 64u);
  EXPECT_EQ(enumerate_graphs(5).size(), 1024u);
}
