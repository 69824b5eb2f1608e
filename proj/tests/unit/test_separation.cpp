#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "plastic/random_spaces.hpp"
#include "plastic/separation.hpp"

using namespace plastic;
using fixtures::equi;

namespace {

/// Lexicographically smallest optimal subset, by brute force.
template <typename Accept, typename Score, typename Better>
IndexSet lex_first_optimum(const FiniteMetricSpace& x, Accept accept, Score score, Better better) {
  bool have = false;
  decltype(score(std::uint64_t{1})) best{};
  IndexSet best_set;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    if (!accept(mask)) continue;
    const auto value = score(mask);
    const IndexSet set = oracle::members(mask);
    if (!have || better(value, best) || (!better(best, value) && set < best_set)) {
      have = true;
      best = value;
      best_set = set;
    }
  }
  return best_set;
}

std::vector<Rational> probe_points(const FiniteMetricSpace& x) {
  std::vector<Rational> out = profile_sample_points(x);
  out.push_back(x.distances().front() / Rational(3));
  return out;
}

}  // namespace

TEST(Net, FullSetIsAlwaysANet) {
  const FiniteMetricSpace s = fixtures::random_space(1, 5);
  for (const Rational& eps : {Rational(1, 100), Rational(1), Rational(7)}) EXPECT_TRUE(is_eps_net(s, all_points(s), eps));
}

TEST(Net, StrictInequality) {
  const IndexSet one{0};
  EXPECT_FALSE(is_eps_net(equi(3, 1), one, 1));
  EXPECT_TRUE(is_eps_net(equi(3, 1), one, Rational(3, 2)));
}

TEST(Net, EmptySetIsNoNetAndEpsMustBePositive) {
  EXPECT_FALSE(is_eps_net(equi(3, 1), IndexSet{}, 5));
  EXPECT_THROW((void)is_eps_net(equi(3, 1), IndexSet{0}, 0), std::invalid_argument);
}

TEST(Separated, SingletonAlwaysSeparated) {
  EXPECT_TRUE(is_eps_separated(equi(3, 1), IndexSet{2}, 1000));
}

TEST(Separated, NonStrictInequality) {
  const FiniteMetricSpace s = equi(3, 1);
  EXPECT_TRUE(is_eps_separated(s, all_points(s), 1));
  EXPECT_FALSE(is_eps_separated(s, all_points(s), Rational(1001, 1000)));
}

TEST(Separated, EmptySubsetRejected) {
  EXPECT_THROW((void)is_eps_separated(equi(3, 1), IndexSet{}, 1), std::invalid_argument);
}

TEST(Maximal, Examples) {
  const FiniteMetricSpace r = fixtures::random_space(8, 5);
  EXPECT_TRUE(is_maximal_separated(r, all_points(r), *r.min_distance()));
  EXPECT_FALSE(is_maximal_separated(equi(3, 1), IndexSet{0}, 1));
  EXPECT_THROW((void)is_maximal_separated(equi(3, 1), all_points(equi(3, 1)), 2), std::invalid_argument);
}

TEST(Maximal, WitnessOfNSepMaxIsMaximalAndANet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FiniteMetricSpace x = fixtures::random_space(seed, 7);
    for (const Rational& eps : probe_points(x)) {
      const SubsetCount n = n_sep_max(x, eps);
      ASSERT_TRUE(is_maximal_separated(x, n.witness, eps));
      EXPECT_TRUE(is_eps_net(x, n.witness, eps));
      const SubsetValue s = s_max(x, eps);
      ASSERT_TRUE(is_maximal_separated(x, s.witness, eps));
      EXPECT_TRUE(is_eps_net(x, s.witness, eps));
    }
  }
}

TEST(NSepMax, Examples) {
  const FiniteMetricSpace r = fixtures::random_space(3, 6);
  EXPECT_EQ(n_sep_max(r, r.diameter() + Rational(1, 7)).count, 1u);
  EXPECT_EQ(n_sep_max(equi(5, 1), 1).count, 5u);
}

TEST(SMax, Examples) {
  const FiniteMetricSpace r = fixtures::random_space(4, 6);
  EXPECT_EQ(s_max(r, r.diameter() + Rational(1)).value, Rational(0));
  EXPECT_EQ(s_max(r, *r.min_distance()).value, sigma(r));
  EXPECT_EQ(s_max(r, *r.min_distance() / Rational(2)).value, sigma(r));
}

TEST(NNetMin, Examples) {
  const FiniteMetricSpace r = fixtures::random_space(5, 6);
  EXPECT_EQ(n_net_min(r, r.diameter() + Rational(1, 100)).count, 1u);
  EXPECT_EQ(n_net_min(equi(5, 1), 1).count, 5u);
}

TEST(AlphaMin, Examples) {
  const FiniteMetricSpace r = fixtures::random_space(6, 6);
  EXPECT_EQ(alpha_min(r, r.diameter() + Rational(1, 100)).value, Rational(0));
  EXPECT_EQ(alpha_min(equi(5, 1), 1).value, Rational(10));
}

TEST(Separation, AgreesWithFullSubsetEnumeration) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const FiniteMetricSpace x = fixtures::random_space(seed, 10);
    for (const Rational& eps : probe_points(x)) {
      const oracle::Separation o = oracle::separation(x, eps);
      const SubsetValue s = s_max(x, eps);
      const SubsetValue a = alpha_min(x, eps);
      const SubsetCount big = n_sep_max(x, eps);
      const SubsetCount small = n_net_min(x, eps);
      ASSERT_EQ(s.value, o.s) << "seed " << seed << " eps " << eps;
      ASSERT_EQ(a.value, o.alpha) << "seed " << seed << " eps " << eps;
      ASSERT_EQ(big.count, o.n_sep) << "seed " << seed << " eps " << eps;
      ASSERT_EQ(small.count, o.n_net) << "seed " << seed << " eps " << eps;
      EXPECT_EQ(sigma(x, s.witness), s.value);
      EXPECT_EQ(sigma(x, a.witness), a.value);
      EXPECT_TRUE(is_eps_separated(x, s.witness, eps));
      EXPECT_TRUE(is_eps_net(x, a.witness, eps));
      EXPECT_EQ(big.witness.size(), big.count);
      EXPECT_EQ(small.witness.size(), small.count);
    }
  }
}

TEST(Separation, WitnessesAreLexicographicallySmallest) {
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    // Coarse distances create many ties.
    InstanceGenerator gen(seed);
    const FiniteMetricSpace x = gen.band_space(7, 2);
    for (const Rational& eps : probe_points(x)) {
      const auto sep = [&](std::uint64_t m) { return oracle::separated(x, m, eps); };
      const auto net = [&](std::uint64_t m) { return oracle::net(x, m, eps); };
      const auto sig = [&](std::uint64_t m) { return oracle::sigma(x, m); };
      const auto size = [](std::uint64_t m) { return static_cast<std::size_t>(__builtin_popcountll(m)); };
      const auto more = [](const auto& a, const auto& b) { return a > b; };
      const auto less = [](const auto& a, const auto& b) { return a < b; };
      EXPECT_EQ(s_max(x, eps).witness, lex_first_optimum(x, sep, sig, more)) << "seed " << seed << " eps " << eps;
      EXPECT_EQ(n_sep_max(x, eps).witness, lex_first_optimum(x, sep, size, more)) << "seed " << seed << " eps " << eps;
      EXPECT_EQ(alpha_min(x, eps).witness, lex_first_optimum(x, net, sig, less)) << "seed " << seed << " eps " << eps;
      EXPECT_EQ(n_net_min(x, eps).witness, lex_first_optimum(x, net, size, less)) << "seed " << seed << " eps " << eps;
    }
  }
}

TEST(Separation, RejectsOversizedSpaces) {
  const FiniteMetricSpace big = equi(kMaxSearchPoints + 1, 1);
  EXPECT_THROW((void)n_sep_max(big, 1), std::length_error);
  EXPECT_THROW((void)s_max(big, 1), std::length_error);
  EXPECT_THROW((void)n_net_min(big, 1), std::length_error);
  EXPECT_THROW((void)alpha_min(big, 1), std::length_error);
}

TEST(Separation, LargeEquilateralStaysFast) {
  const FiniteMetricSpace s = equi(40, 1);
  EXPECT_EQ(n_sep_max(s, 1).count, 40u);
  EXPECT_EQ(n_net_min(s, 1).count, 40u);
  EXPECT_EQ(n_net_min(s, 2).count, 1u);
}

TEST(Separation, NonPositiveEpsRejected) {
  EXPECT_THROW((void)s_max(equi(3, 1), 0), std::invalid_argument);
  EXPECT_THROW((void)n_net_min(equi(3, 1), -1), std::invalid_argument);
}

TEST(Separation, SAtLeastDiameter) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FiniteMetricSpace x = fixtures::random_space(seed, 6);
    for (const Rational& eps : profile_sample_points(x)) {
      if (eps <= x.diameter()) {
        EXPECT_GE(s_max(x, eps).value, x.diameter());
      }
    }
  }
}

TEST(Profile, Equilateral) {
  const SeparationProfile p = profile(equi(3, 1));
  EXPECT_EQ(p.breakpoints, (std::vector<Rational>{1}));
  EXPECT_EQ(p.at(1).s.value, Rational(3));
  EXPECT_EQ(p.at(Rational(3, 2)).s.value, Rational(0));
}

TEST(Profile, TwoPoints) {
  const SeparationProfile p = profile(fixtures::two_point(2));
  EXPECT_EQ(p.at(Rational(1, 1000)).s.value, Rational(2));
  EXPECT_EQ(p.at(2).s.value, Rational(2));
  EXPECT_EQ(p.at(Rational(2001, 1000)).s.value, Rational(0));
  EXPECT_EQ(p.at(100).s.value, Rational(0));
}

TEST(Profile, SamplePointsAreBreakpointsMidpointsAndBeyond) {
  const FiniteMetricSpace x = fixtures::from_upper(3, {1, 2, 2});
  EXPECT_EQ(profile_sample_points(x), (std::vector<Rational>{1, Rational(3, 2), 2, 3}));
}

TEST(Profile, MatchesPointwiseRecomputationAtRandomEps) {
  InstanceGenerator gen(808);
  for (int trial = 0; trial < 5; ++trial) {
    const FiniteMetricSpace x = gen.band_space(8);
    const SeparationProfile p = profile(x);
    for (int probe = 0; probe < 40; ++probe) {
      const Rational eps(gen.uniform(1, 300), 120);
      const ProfileSample& row = p.at(eps);
      EXPECT_EQ(row.s.value, s_max(x, eps).value) << eps;
      EXPECT_EQ(row.alpha.value, alpha_min(x, eps).value) << eps;
      EXPECT_EQ(row.n_sep.count, n_sep_max(x, eps).count) << eps;
      EXPECT_EQ(row.n_net.count, n_net_min(x, eps).count) << eps;
    }
    // Exactly at each breakpoint as well.
    for (const Rational& b : p.breakpoints) EXPECT_EQ(p.at(b).s.value, s_max(x, b).value);
  }
}

TEST(Profile, MonotoneAndBoundaryValues) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FiniteMetricSpace x = fixtures::random_space(seed, 7);
    const SeparationProfile p = profile(x);
    for (std::size_t i = 1; i < p.samples.size(); ++i) {
      EXPECT_LE(p.samples[i].s.value, p.samples[i - 1].s.value);
      EXPECT_LE(p.samples[i].n_sep.count, p.samples[i - 1].n_sep.count);
      EXPECT_LE(p.samples[i].n_net.count, p.samples[i - 1].n_net.count);
    }
    EXPECT_EQ(p.samples.front().s.value, sigma(x));
    EXPECT_EQ(p.samples.front().n_sep.count, x.size());
    EXPECT_EQ(p.samples.back().s.value, Rational(0));
    EXPECT_EQ(p.samples.back().n_sep.count, 1u);
  }
}
