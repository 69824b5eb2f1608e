#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plastic/gauge.hpp"

using namespace plastic;

TEST(Gauge, IdentityReducesToSigma) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FiniteMetricSpace s = fixtures::random_space(seed, 5);
    const IndexSet all = all_points(s);
    EXPECT_EQ(sigma_g(s, all, MonotoneGauge()), sigma(s));
    EXPECT_EQ(sigma_g(s, all, MonotoneGauge::power(1)), sigma(s));
  }
  EXPECT_TRUE(MonotoneGauge().is_identity());
}

TEST(Gauge, SquareOnEquilateralSideTwo) {
  const FiniteMetricSpace s = fixtures::equi(3, 2);
  EXPECT_EQ(sigma_g(s, all_points(s), MonotoneGauge::power(2)), Rational(12));
}

TEST(Gauge, CubeMatchesNaiveLoop) {
  const FiniteMetricSpace s = fixtures::random_space(77, 4);
  Rational expected;
  for (Index a = 0; a < 4; ++a) {
    for (Index b = a + 1; b < 4; ++b) expected += s.d(a, b) * s.d(a, b) * s.d(a, b);
  }
  EXPECT_EQ(sigma_g(s, all_points(s), MonotoneGauge::power(3)), expected);
}

TEST(Gauge, PowerNeedsPositiveExponent) {
  EXPECT_THROW((void)MonotoneGauge::power(0), std::invalid_argument);
  EXPECT_THROW((void)MonotoneGauge::power(-2), std::invalid_argument);
}

TEST(Gauge, PiecewiseLinearInterpolatesAndExtends) {
  const MonotoneGauge g = MonotoneGauge::piecewise_linear({{1, 2}, {3, 3}});
  EXPECT_EQ(g(0), Rational(0));
  EXPECT_EQ(g(Rational(1, 2)), Rational(1));
  EXPECT_EQ(g(1), Rational(2));
  EXPECT_EQ(g(2), Rational(5, 2));
  EXPECT_EQ(g(5), Rational(4));  // last slope 1/2 continues
}

TEST(Gauge, PiecewiseLinearRejectsNonIncreasing) {
  EXPECT_THROW((void)MonotoneGauge::piecewise_linear({}), std::invalid_argument);
  EXPECT_THROW((void)MonotoneGauge::piecewise_linear({{1, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW((void)MonotoneGauge::piecewise_linear({{1, 2}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW((void)MonotoneGauge::piecewise_linear({{0, 1}}), std::invalid_argument);
  EXPECT_THROW((void)MonotoneGauge::piecewise_linear({{1, -1}}), std::invalid_argument);
}

TEST(Gauge, NegativeArgumentRejected) {
  EXPECT_THROW((void)MonotoneGauge::power(2)(Rational(-1)), std::invalid_argument);
}

TEST(Gauge, Describe) {
  EXPECT_EQ(MonotoneGauge::power(3).describe(), "t^3");
}
