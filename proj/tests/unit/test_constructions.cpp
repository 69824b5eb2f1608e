#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plastic/bounds.hpp"
#include "plastic/constructions.hpp"
#include "plastic/search.hpp"

using namespace plastic;

namespace {

oracle::Margins naive(const PointMap& f) { return oracle::margins(f.domain(), f.codomain(), f.table()); }

}  // namespace

TEST(LineSpace, DistancesAndLabels) {
  const FiniteMetricSpace s = line_space({Rational(0), Rational(1, 2), Rational(3)});
  EXPECT_EQ(s.labels(), (std::vector<std::string>{"0", "1/2", "3"}));
  EXPECT_EQ(s.d(0, 2), Rational(3));
  EXPECT_EQ(s.d(1, 2), Rational(5, 2));
  EXPECT_THROW((void)line_space({Rational(0)}, {"a", "b"}), std::invalid_argument);
}

TEST(SharpCase1, SevenPointsProfile) {
  const SharpExample ex = sharp_case1(7, 1, 1);
  EXPECT_EQ(ex.space.size(), 7u);
  EXPECT_EQ(ex.first_orbit, 3);
  EXPECT_EQ(ex.second_orbit, 4);
  EXPECT_EQ(ex.m, 12);
  EXPECT_EQ(ex.padding, 0u);
  const oracle::Margins m = naive(ex.map);
  EXPECT_EQ(m.e, Rational(1));
  EXPECT_EQ(m.c, Rational(1, 11));
  ASSERT_EQ(ex.orbit_distances.size(), 12u);
  EXPECT_EQ(ex.orbit_distances[0], Rational(1));
  EXPECT_EQ(ex.orbit_distances[1], Rational(2));
  for (std::size_t k = 2; k < 12; ++k) {
    EXPECT_EQ(ex.orbit_distances[k], ex.orbit_distances[k - 1] - Rational(1, 11));
  }
}

TEST(SharpCase1, FivePointDistances) {
  const SharpExample ex = sharp_case1(5, 1, 1);
  EXPECT_EQ(ex.orbit_distances,
            (std::vector<Rational>{1, 2, Rational(9, 5), Rational(8, 5), Rational(7, 5), Rational(6, 5)}));
}

TEST(SharpCase1, AttainsOrbitBoundForManySizes) {
  for (std::int64_t n : {5, 7, 8, 9, 10, 11, 12, 13, 15, 16, 20}) {
    for (const Rational& eps : {Rational(1), Rational(1, 3)}) {
      const SharpExample ex = sharp_case1(n, eps, 2);
      const oracle::Margins m = naive(ex.map);
      EXPECT_EQ(ex.m, m_of_n(n));
      EXPECT_EQ(static_cast<std::int64_t>(ex.space.size()), n);
      EXPECT_EQ(ex.first_orbit + ex.second_orbit, n);
      EXPECT_EQ(ex.first_orbit * ex.second_orbit, ex.m);
      EXPECT_EQ(m.e, eps) << n;
      EXPECT_EQ(m.c, bound_orbit(n, eps)) << n;
      EXPECT_TRUE(classify(ex.map).bijective);
      EXPECT_EQ(orbit_period(ex.map, 0, static_cast<Index>(ex.first_orbit)), ex.m);
    }
  }
}

TEST(SharpCase1, PaddingNeverNeeded) {
  const SharpExample padded = sharp_case1(9, 1, 1, true);
  const SharpExample plain = sharp_case1(9, 1, 1);
  EXPECT_EQ(padded.padding, 0u);
  EXPECT_EQ(padded.space, plain.space);
  EXPECT_FALSE(padded.note.empty());
}

TEST(SharpCase1, RejectsBadParameters) {
  EXPECT_THROW((void)sharp_case1(6, 1, 1), std::invalid_argument);
  EXPECT_THROW((void)sharp_case1(4, 1, 1), std::invalid_argument);
  EXPECT_THROW((void)sharp_case1(7, 0, 1), std::invalid_argument);
  EXPECT_THROW((void)sharp_case1(7, 2, 1), std::invalid_argument);
}

TEST(SharpCyclic, SmallSizes) {
  for (std::int64_t n : {3, 4, 6}) {
    const SharpExample ex = sharp_cyclic(n, 1, 1);
    const oracle::Margins m = naive(ex.map);
    EXPECT_EQ(ex.m, n);
    EXPECT_EQ(m.e, Rational(1));
    EXPECT_EQ(m.c, bound_orbit(n, 1)) << n;
    EXPECT_EQ(orbit_period(ex.map, 0, 1), n);
  }
  EXPECT_THROW((void)sharp_cyclic(5, 1, 1), std::invalid_argument);
}

TEST(SharpExamples, ModulusMatchesOrbitBoundUpToEps) {
  // The eps-modulus at eps' < eps lies between bound_orbit(N, eps') and C(f).
  for (std::int64_t n : {3, 4, 5}) {
    const SharpExample ex = n == 5 ? sharp_case1(n, 1, 1) : sharp_cyclic(n, 1, 1);
    const Rational eps(9, 10);
    const ModulusReport r = exact_modulus(ex.space, ex.space, eps, MapClass::kBijections);
    ASSERT_EQ(r.verdict, Verdict::kValue);
    EXPECT_GE(*r.value, bound_orbit(n, eps));
    EXPECT_LE(*r.value, bound_orbit(n, 1));
  }
}

TEST(UnionTruncation, Structure) {
  for (int m = 1; m <= 3; ++m) {
    const UnionTruncation u = nonuniform_union_truncation(m);
    EXPECT_EQ(u.space.size(), static_cast<std::size_t>(6 * m));
    ASSERT_EQ(u.maps.size(), static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
      EXPECT_EQ(u.piece_orders[p], 5);
      EXPECT_EQ(u.deltas[p], Rational(1, p + 1));
      EXPECT_EQ(u.piece_offsets[p], static_cast<std::size_t>(6 * p));
      const oracle::Margins mm = naive(u.maps[p]);
      EXPECT_EQ(mm.e, Rational(1));
      EXPECT_LE(mm.c, u.deltas[p]);
      EXPECT_GT(mm.c, Rational(0));
      EXPECT_TRUE(classify(u.maps[p]).bijective);
    }
  }
  const UnionTruncation u = nonuniform_union_truncation(2);
  EXPECT_EQ(u.space.labels()[0], "p1.x1");
  EXPECT_EQ(u.space.labels()[5], "p1.e");
  EXPECT_EQ(u.space.d(0, 6), Rational(3, 2));
  EXPECT_EQ(u.space.d(0, 5), Rational(1) + Rational(1, 10) + Rational(1));
  EXPECT_THROW((void)nonuniform_union_truncation(0), std::invalid_argument);
}

TEST(IntervalGrid, ConstructionProperties) {
  const IntervalGrid g = interval_pair_grid(Rational(1, 10), Rational(9, 10));
  EXPECT_EQ(g.x.size(), 12u);
  EXPECT_EQ(g.f(0), 0u);
  EXPECT_EQ(g.y.labels()[g.f(11)], "4");
  EXPECT_EQ(g.y.labels()[g.f(10)], "9/10");
  const oracle::Margins m = naive(g.f);
  EXPECT_EQ(m.c, Rational(1, 10));
  EXPECT_EQ(g.y.d(g.f(0), g.f(11)) - g.x.d(0, 11), Rational(1));
}

TEST(IntervalGrid, LargestExpansionIsTwoMinusT) {
  for (const Rational& t : {Rational(1, 2), Rational(9, 10), Rational(99, 100)}) {
    const IntervalGrid g = interval_pair_grid(Rational(1, 20), t);
    const oracle::Margins m = naive(g.f);
    EXPECT_EQ(m.e, Rational(2) - t);
    EXPECT_EQ(m.c, Rational(1) - t);
    const MapMargins lib = margins(g.f);
    EXPECT_EQ(lib.expansion, m.e);
    EXPECT_EQ(lib.expansion_pair, (IndexPair{20, 21}));
  }
}

TEST(IntervalGrid, RejectsBadParameters) {
  EXPECT_THROW((void)interval_pair_grid(Rational(2, 7), Rational(1, 2)), std::invalid_argument);
  EXPECT_THROW((void)interval_pair_grid(Rational(1), Rational(1, 2)), std::invalid_argument);
  EXPECT_THROW((void)interval_pair_grid(Rational(1, 4), Rational(1)), std::invalid_argument);
  EXPECT_THROW((void)interval_pair_grid(Rational(1, 4), Rational(0)), std::invalid_argument);
}

TEST(Recipes, KindNamesRoundTrip) {
  for (RecipeKind k : {RecipeKind::kSharpCase1, RecipeKind::kSharpCyclic, RecipeKind::kPaddedSharp,
                       RecipeKind::kNonuniformUnionTruncation, RecipeKind::kIntervalPairGrid,
                       RecipeKind::kHilbertShiftSample}) {
    EXPECT_EQ(parse_recipe_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_recipe_kind("Sharp").has_value());
}

TEST(Recipes, GenerateIsDeterministic) {
  GeneratorRecipe r;
  r.kind = RecipeKind::kHilbertShiftSample;
  r.seed = 42;
  r.samples = 6;
  r.precision = 20;
  const GeneratedArtifact a = generate(r);
  const GeneratedArtifact b = generate(r);
  ASSERT_TRUE(a.hilbert && b.hilbert);
  ASSERT_EQ(a.hilbert->pairs.size(), b.hilbert->pairs.size());
  for (std::size_t k = 0; k < a.hilbert->pairs.size(); ++k) {
    EXPECT_EQ(a.hilbert->pairs[k].before, b.hilbert->pairs[k].before);
    EXPECT_EQ(a.hilbert->pairs[k].after.lo, b.hilbert->pairs[k].after.lo);
  }

  r = GeneratorRecipe{};
  r.kind = RecipeKind::kNonuniformUnionTruncation;
  r.m = 2;
  const GeneratedArtifact u = generate(r);
  ASSERT_EQ(u.spaces.size(), 1u);
  ASSERT_EQ(u.maps.size(), 2u);
  EXPECT_EQ(u.maps[1].first, "g2");
  EXPECT_EQ(u.maps[1].second.table(), generate(r).maps[1].second.table());
}
