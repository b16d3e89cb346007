#include <gtest/gtest.h>

#include "chroma/errors.hpp"
#include "chroma/ghom.hpp"
#include "chroma/lgvgrid.hpp"
#include "helpers.hpp"

using namespace chroma;
using chroma::testing::mono;
using chroma::testing::one;

namespace {

const UnitIntervalOrder kU5 = UnitIntervalOrder::parse("3,4,5,6,6");
const UnitIntervalOrder kU8 = UnitIntervalOrder::parse("3,4,5,6,7,8,9,9");

Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

// Partitions with at most `max_weight` boxes, excluding the empty one.
std::vector<Partition> small_partitions(int max_weight) {
  std::vector<Partition> out;
  for (int d = 1; d <= max_weight; ++d)
    for (const auto& p : partitions_of(d)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Grid, SourceAndDestinationCoordinates) {
  const auto g = build_grid(kU8, 4, {4, 4, 3, 2});
  EXPECT_EQ(g.sources[0], (GridVertex{4, 1}));
  EXPECT_EQ(g.destinations[0], (GridVertex{8, 9}));
  EXPECT_EQ(g.sources[3], (GridVertex{1, 1}));
  EXPECT_EQ(g.destinations[3], (GridVertex{3, 9}));

  const auto h = build_grid(kU5, 7, ones(5));
  EXPECT_EQ(h.destinations[0], (GridVertex{8, 6}));
  EXPECT_EQ(h.destinations[5], (GridVertex{2, 6}));  // lambda_6 = 0
  EXPECT_EQ(h.lambda.size(), 7u);

  EXPECT_THROW(build_grid(kU5, 2, {1, 1, 1}), BadShape);
}

TEST(Grid, EmptyShapeHasOnlyTheVerticalPath) {
  for (const auto& u : enumerate_uios(3)) {
    const auto g = build_grid(u, 1, {});
    EXPECT_EQ(g.sources[0].col, g.destinations[0].col);
    const auto paths = enumerate_paths(g, g.sources[0], g.destinations[0]);
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_TRUE(paths[0].picked.empty());
    EXPECT_EQ(path_sum(g, g.sources[0], g.destinations[0]), one(u.size()));
  }
}

TEST(Grid, PlanarDag) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : enumerate_uios(n)) EXPECT_TRUE(grid_is_planar_dag(build_grid(u, 3, {3, 2, 1}))) << u.str();
}

TEST(PathSum, Examples) {
  const auto u3 = UnitIntervalOrder::parse("3,4,4");
  const auto g = build_grid(u3, 3, {2});
  EXPECT_EQ(path_sum(g, {1, 1}, {3, 4}), mono({1, 0, 1}));
}

TEST(PathSum, RealisesElementaryAnalogues) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& u : enumerate_uios(n)) {
      GAnalogueContext ctx(u);
      const auto g = build_grid(u, n + 1, ones(n + 1));
      for (int i = 1; i <= 2; ++i)
        for (int j = 0; j + i <= g.columns; ++j) {
          const GridVertex a{i, 1}, b{i + j, n + 1};
          EXPECT_EQ(path_sum(g, a, b), ctx.elementary(j)) << u.str() << ' ' << i << ' ' << j;
          Polynomial total(n);
          for (const auto& p : enumerate_paths(g, a, b)) total += Polynomial::term(p.weight(n), 1);
          EXPECT_EQ(total, ctx.elementary(j));
        }
    }
}

TEST(Paths, MakeAndParse) {
  const auto g = build_grid(kU5, 7, ones(7));
  const auto p = make_path(g, {5, 1}, {1, 3, 5});
  EXPECT_EQ(p.end(), (GridVertex{8, 6}));
  EXPECT_EQ(path_from_vertices(g, p.vertices), p);
  EXPECT_THROW(make_path(g, {5, 1}, {1, 2}), BadParameter);  // 1 and 2 are incomparable
  EXPECT_THROW(path_from_vertices(g, {{1, 1}, {2, 2}}), BadParameter);
}

TEST(Multipaths, SingleSource) {
  const auto u = UnitIntervalOrder::parse("3,4,4");
  const auto g = build_grid(u, 1, {2});
  const auto all = enumerate_multipaths(g);
  EXPECT_EQ(all.size(), enumerate_paths(g, g.sources[0], g.destinations[0]).size());
  for (const auto& mp : all) {
    EXPECT_EQ(mp.sign(), 1);
    EXPECT_TRUE(mp.non_intersecting());
  }
  EXPECT_TRUE(lgv_check(g));
}

TEST(Multipaths, ChainPairSigns) {
  const auto g = build_grid(UnitIntervalOrder::parse("2,3"), 2, {1, 1});
  const auto all = enumerate_multipaths(g);
  int identity = 0, swapped = 0;
  Polynomial signed_sum(2);
  for (const auto& mp : all) {
    (mp.sigma == std::vector<int>{0, 1} ? identity : swapped)++;
    EXPECT_EQ(mp.sign(), mp.sigma[0] == 0 ? 1 : -1);
    signed_sum += mp.sign() == 1 ? mp.weight(2) : -mp.weight(2);
  }
  EXPECT_GT(identity, 0);
  EXPECT_GT(swapped, 0);
  EXPECT_EQ(signed_sum, lgv_determinant(g));
}

TEST(Multipaths, OrderAndBudget) {
  const auto g = build_grid(kU5, 3, {1, 1, 1});
  const auto all = enumerate_multipaths(g);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].sigma, all[i].sigma);
  MultipathOptions tight;
  tight.budget = 5;
  EXPECT_THROW(enumerate_multipaths(g, tight), TooLarge);
}

TEST(Multipaths, CrossingExampleIsEnumerated) {
  const auto g = build_grid(kU5, 7, ones(7));
  const std::vector<std::vector<int>> picks{{}, {}, {1, 3, 5}, {}, {2, 4}, {4}, {5}};
  std::vector<GridPath> paths;
  for (std::size_t i = 0; i < picks.size(); ++i) paths.push_back(make_path(g, g.sources[i], picks[i]));
  const auto crossing = make_multipath(g, paths);
  EXPECT_EQ(crossing.multiplier(), 3);
  EXPECT_FALSE(crossing.non_intersecting());
  // a full enumeration of this grid is large; search the sigma block instead
  const auto candidates = enumerate_paths(g, g.sources[4], g.destinations[crossing.sigma[4]]);
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), crossing.paths[4]), candidates.end());
  const auto j = to_json(crossing);
  EXPECT_EQ(j["sigma"], (nlohmann::json{2, 3, 1, 5, 4, 6, 7}));
}

TEST(Lgv, DeterminantIdentity) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& u : enumerate_uios(n))
      for (const auto& lam : small_partitions(4)) {
        const auto r = lgv_report(build_grid(u, lam.length(), lam));
        EXPECT_TRUE(r.ok()) << u.str() << " / " << lam.str();
      }
  EXPECT_TRUE(lgv_check(build_grid(kU5, 5, ones(5))));
}

TEST(Lgv, DeterminantIsJacobiTrudi) {
  // entries are e^G_{lambda_j + i - j}, so the determinant is s^G of the conjugate
  for (const auto& u : enumerate_uios(4)) {
    GAnalogueContext ctx(u);
    for (const auto& lam : small_partitions(4))
      EXPECT_EQ(lgv_determinant(build_grid(u, lam.length(), lam)), schur_g(ctx, lam.conjugate()));
  }
}

TEST(SchurViaLgv, Examples) {
  const auto chain = UnitIntervalOrder::parse("2,3");
  EXPECT_EQ(schur_via_lgv(chain, {1}), mono({1, 0}) + mono({0, 1}));
  EXPECT_EQ(schur_via_lgv(chain, {1, 1}), mono({2, 0}) + mono({1, 1}) + mono({0, 2}));
}

TEST(SchurViaLgv, MatchesSchurG) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& u : enumerate_uios(n)) {
      GAnalogueContext ctx(u);
      for (const auto& lam : small_partitions(4)) {
        const auto s = schur_via_lgv(u, lam);
        EXPECT_EQ(s, schur_g(ctx, lam.conjugate())) << u.str() << " / " << lam.str();
        EXPECT_TRUE(is_monomial_positive(s));
      }
    }
}
