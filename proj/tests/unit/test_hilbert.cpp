#include <gtest/gtest.h>

#include "plastic/hilbert.hpp"
#include "plastic/random_spaces.hpp"

using namespace plastic;

TEST(CertifiedSqrt, ExactSquares) {
  for (const Rational& r : {Rational(0), Rational(1), Rational(4, 9), Rational(169, 100)}) {
    const CertifiedInterval c = certified_sqrt(r, 5);
    EXPECT_TRUE(c.exact());
    EXPECT_EQ(c.lo * c.lo, r);
  }
}

TEST(CertifiedSqrt, EnclosesIrrationalRoots) {
  InstanceGenerator gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r(gen.uniform(0, 10000), gen.uniform(1, 997));
    for (int digits : {1, 5, 30}) {
      const CertifiedInterval c = certified_sqrt(r, digits);
      EXPECT_LE(c.lo * c.lo, r);
      EXPECT_GE(c.hi * c.hi, r);
      if (!c.exact()) {
        Rational width(1);
        for (int d = 0; d < digits; ++d) width /= Rational(10);
        EXPECT_EQ(c.hi - c.lo, width);
      }
    }
  }
}

TEST(CertifiedSqrt, KnownDigits) {
  const CertifiedInterval c = certified_sqrt(Rational(2), 3);
  EXPECT_EQ(c.lo, Rational(1414, 1000));
  EXPECT_EQ(c.hi, Rational(1415, 1000));
  EXPECT_THROW((void)certified_sqrt(Rational(-1), 3), std::invalid_argument);
  EXPECT_THROW((void)certified_sqrt(Rational(2), 0), std::invalid_argument);
}

TEST(ShiftMap, WitnessDoublesSquaredDistance) {
  const ShiftPairResult w = shift_pair(BallVector{}, BallVector{Rational(1)}, 10);
  EXPECT_EQ(w.before, Rational(1));
  EXPECT_TRUE(w.after.exact());
  EXPECT_EQ(w.after.lo, Rational(2));
  EXPECT_TRUE(w.expanding);
}

TEST(ShiftMap, EnclosureContainsTrueValueForRationalRoots) {
  // 1 - |x|^2 = 9/25 and 1 - |y|^2 = 16/25: the gap is exactly (3/5 - 4/5)^2.
  const BallVector x{Rational(4, 5)};
  const BallVector y{Rational(0), Rational(3, 5)};
  const ShiftPairResult r = shift_pair(x, y, 8);
  EXPECT_EQ(r.before, Rational(1));
  EXPECT_TRUE(r.after.exact());
  EXPECT_EQ(r.after.lo, Rational(1) + Rational(1, 25));
}

TEST(ShiftMap, NoncontractiveOnRandomSamples) {
  InstanceGenerator gen(17);
  std::vector<BallVector> sample;
  for (int k = 0; k < 25; ++k) sample.push_back(gen.ball_vector(4));
  for (const auto& v : sample) EXPECT_LE(squared_norm(v), Rational(1));
  const HilbertShiftReport r = hilbert_shift_demo(sample, 30);
  EXPECT_EQ(r.pairs.size(), 25u * 24u / 2u);
  EXPECT_TRUE(r.all_noncontractive);
  for (const auto& p : r.pairs) {
    EXPECT_LE(p.after.lo, p.after.hi);
    EXPECT_GE(p.after.lo, p.before);
    EXPECT_LT(p.first, p.second);
  }
  EXPECT_TRUE(r.witness.expanding);
}

TEST(ShiftMap, RejectsPointsOutsideTheBall) {
  EXPECT_THROW((void)shift_pair(BallVector{Rational(1), Rational(1)}, BallVector{}, 5), std::invalid_argument);
  EXPECT_THROW((void)hilbert_shift_demo({}, 0), std::invalid_argument);
}
