#include <gtest/gtest.h>

#include "chroma/chromatic.hpp"
#include "chroma/errors.hpp"
#include "chroma/symfunc.hpp"

using namespace chroma;

namespace {

// Proper colorings with q colors, counted directly.
BigInt proper_colorings(const Graph& g, int q) {
  const int n = g.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  BigInt count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int col = 0; col < q; ++col) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[static_cast<std::size_t>(u)] == col);
      if (!ok) continue;
      c[static_cast<std::size_t>(v)] = col;
      rec(v + 1);
    }
  };
  rec(0);
  return count;
}

// m_lambda(1^q): arrangements of lambda's parts into q slots.
BigInt monomial_at_ones(const Partition& lam, int q) {
  if (lam.length() > q) return 0;
  BigInt out = factorial(q) / factorial(q - lam.length());
  for (int mult : lam.multiplicities()) out /= factorial(mult);
  return out;
}

SymFunc e_basis(const Graph& g) { return convert(chromatic_symmetric_stable(g), Basis::e); }

Graph claw() {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}};
  return Graph::from_edges(4, edges);
}

}  // namespace

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_symmetric(Graph::complete(1)), SymFunc::element(Basis::m, {1}));
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(e_basis(Graph::complete(n)), SymFunc::element(Basis::e, {n}, Rational(factorial(n))));
  const auto x = e_basis(inc_graph(UnitIntervalOrder::parse("3,4,4")));
  EXPECT_EQ(x, SymFunc::element(Basis::e, {2, 1}) + SymFunc::element(Basis::e, {3}, 3));
}

TEST(Chromatic, BruteForceMatchesStablePartitions) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n))
      EXPECT_EQ(chromatic_symmetric(g), chromatic_symmetric_stable(g)) << g.str();
  for (const auto& u : enumerate_uios(6)) {
    const auto g = inc_graph(u);
    EXPECT_EQ(chromatic_symmetric(g), chromatic_symmetric_stable(g)) << u.str();
  }
}

TEST(Chromatic, SpecialisesToChromaticPolynomial) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      const auto x = chromatic_symmetric_stable(g);
      for (int q = 1; q <= 4; ++q) {
        Rational total = 0;
        for (const auto& [lam, c] : x.coeffs()) total += c * Rational(monomial_at_ones(lam, q));
        EXPECT_EQ(total, Rational(proper_colorings(g, q))) << g.str() << " q=" << q;
      }
    }
}

TEST(Chromatic, BruteForceBound) {
  ChromaticOptions opts;
  opts.max_brute_force_n = 4;
  EXPECT_THROW(chromatic_symmetric(Graph::path(5), opts), TooLarge);
  opts.method = ChromaticMethod::stable_partitions;
  EXPECT_NO_THROW(chromatic_symmetric(Graph::path(5), opts));
}

TEST(ECoefficients, Examples) {
  for (int n = 1; n <= 5; ++n) {
    const auto c = e_coefficients(Graph::edgeless(n));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.begin()->first, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    EXPECT_EQ(c.begin()->second, 1);
  }
  EXPECT_EQ(e_coefficients(Graph::complete(2)).at({2}), 2);
  const auto c = e_coefficients(inc_graph(UnitIntervalOrder::parse("3,3,4")));
  EXPECT_EQ(c.at({2, 1}), 2);
  EXPECT_EQ(c.count({3}), 0u);
}

TEST(ECoefficients, MultiplicativeOverDisjointUnion) {
  const auto a = inc_graph(UnitIntervalOrder::parse("3,4,4"));
  const auto b = Graph::path(2);
  const auto lhs = e_basis(a.disjoint_union(b));
  EXPECT_EQ(lhs, e_basis(a) * e_basis(b));
}

TEST(Sinks, Examples) {
  EXPECT_EQ(acyclic_orientation_sinks(Graph::complete(1)), (std::map<int, BigInt>{{1, 1}}));
  EXPECT_EQ(acyclic_orientation_sinks(Graph::complete(2)), (std::map<int, BigInt>{{1, 2}}));
  EXPECT_EQ(acyclic_orientation_sinks(Graph::path(3)), (std::map<int, BigInt>{{1, 3}, {2, 1}}));
  EXPECT_TRUE(check_sink_theorem(Graph::path(3)));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(acyclic_orientation_sinks(Graph::complete(n)).at(1), factorial(n));
    EXPECT_TRUE(check_sink_theorem(Graph::complete(n)));
  }
}

TEST(Sinks, DynamicProgramMatchesOrientations) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n))
      EXPECT_EQ(acyclic_orientation_sinks(g), acyclic_orientation_sinks_brute(g)) << g.str();
}

TEST(Sinks, TotalIsAcyclicOrientationCount) {
  // total number of acyclic orientations is |chi_G(-1)|
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      BigInt total = 0;
      for (const auto& [j, c] : acyclic_orientation_sinks(g)) total += c;
      Rational at_minus_one = 0;
      const auto x = chromatic_symmetric_stable(g);
      // chi_G(q) as a polynomial in q, evaluated at q = -1 via m_lambda(1^q)
      for (const auto& [lam, c] : x.coeffs()) {
        Rational m = 1;
        for (int i = 0; i < lam.length(); ++i) m *= Rational(-1 - i);
        for (int mult : lam.multiplicities()) m /= Rational(factorial(mult));
        at_minus_one += c * m;
      }
      EXPECT_EQ(Rational(total), abs(at_minus_one)) << g.str();
    }
}

TEST(Sinks, TheoremOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n)) EXPECT_TRUE(check_sink_theorem(g)) << g.str();
}

TEST(Positivity, Examples) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Rational> pts;
    for (int i = 1; i <= n; ++i) pts.emplace_back(i, 2);
    const auto u = UnitIntervalOrder::from_points(pts);
    ChromaticOptions opts;
    opts.method = ChromaticMethod::stable_partitions;
    EXPECT_TRUE(positivity_report(inc_graph(u), opts).e_positive) << n;
  }
  const auto claw_report = positivity_report(claw());
  EXPECT_FALSE(claw_report.e_positive);
  EXPECT_TRUE(claw_report.sink_check);
}

TEST(Positivity, SchurPositiveForSmallUios) {
  ChromaticOptions opts;
  opts.method = ChromaticMethod::stable_partitions;
  for (int n = 1; n <= 6; ++n)
    for (const auto& u : enumerate_uios(n)) {
      const auto r = positivity_report(inc_graph(u), opts);
      EXPECT_TRUE(r.s_positive) << u.str();
      EXPECT_TRUE(r.e_positive) << u.str();
    }
}

TEST(Positivity, JsonShape) {
  const auto j = to_json(positivity_report(inc_graph(UnitIntervalOrder::parse("3,4,4"))));
  EXPECT_EQ(j.at("e"), (nlohmann::json{{"2,1", 1}, {"3", 3}}));
  EXPECT_EQ(j.at("ePositive"), true);
  EXPECT_TRUE(j.contains("m") && j.contains("s") && j.contains("sinkCheck"));
}
