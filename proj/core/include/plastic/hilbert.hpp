#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plastic/rational.hpp"

namespace plastic {

/// Closed interval [lo, hi] with rational end points.
struct CertifiedInterval {
  Rational lo;
  Rational hi;

  [[nodiscard]] bool exact() const { return lo == hi; }
};

/// Enclosure of sqrt(r) for r >= 0: exact when r is a square of a rational,
/// otherwise [floor(sqrt(r) 10^d), floor(sqrt(r) 10^d) + 1] / 10^d.
[[nodiscard]] CertifiedInterval certified_sqrt(const Rational& r, int digits);

/// Finite-support vector of the unit ball of l2.
using BallVector = std::vector<Rational>;

[[nodiscard]] Rational squared_norm(const BallVector& v);

struct ShiftPairResult {
  std::size_t first = 0;
  std::size_t second = 0;
  Rational before;              // |x - y|^2, exact
  CertifiedInterval after;      // |f(x) - f(y)|^2 enclosure
  bool noncontractive = false;  // after.lo >= before
  bool expanding = false;       // after.lo > before
};

/// The shift f(x) = (sqrt(1 - |x|^2), x_1, x_2, ...) evaluated on a sample via
///   |f(x) - f(y)|^2 = |x - y|^2 + (sqrt(1 - |x|^2) - sqrt(1 - |y|^2))^2,
/// with the square roots enclosed at the requested precision.
struct HilbertShiftReport {
  int precision = 0;
  std::vector<ShiftPairResult> pairs;
  ShiftPairResult witness;  // x = 0, y = e_1
  bool all_noncontractive = false;
};

/// Throws std::invalid_argument for a vector of norm > 1 or precision < 1.
[[nodiscard]] HilbertShiftReport hilbert_shift_demo(const std::vector<BallVector>& sample, int precision);

/// Evaluates one pair.
[[nodiscard]] ShiftPairResult shift_pair(const BallVector& x, const BallVector& y, int precision);

}  // namespace plastic
