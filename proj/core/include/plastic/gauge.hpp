#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plastic/metric_space.hpp"
#include "plastic/rational.hpp"

namespace plastic {

/// A strictly increasing function g on [0, inf) with g(0) = 0, evaluated
/// exactly. Either an integer power t^k (k >= 1) or a piecewise-linear
/// function through (0, 0) and the given knots, extended past the last knot
/// with the last slope.
class MonotoneGauge {
 public:
  /// The identity t -> t.
  MonotoneGauge() : MonotoneGauge(power(1)) {}

  /// Throws std::invalid_argument for k < 1.
  static MonotoneGauge power(int k);

  /// Knots (t_i, g_i) with 0 < t_1 < t_2 < ... and strictly positive slopes
  /// between consecutive points (starting from the origin). Throws
  /// std::invalid_argument otherwise.
  static MonotoneGauge piecewise_linear(std::vector<std::pair<Rational, Rational>> knots);

  /// Throws std::invalid_argument for t < 0.
  [[nodiscard]] Rational operator()(const Rational& t) const;

  /// "t^k" or "pwl(t1:g1,t2:g2,...)".
  [[nodiscard]] std::string describe() const;

  [[nodiscard]] bool is_identity() const { return knots_.empty() && exponent_ == 1; }

 private:
  MonotoneGauge(int exponent, std::vector<std::pair<Rational, Rational>> knots)
      : exponent_(exponent), knots_(std::move(knots)) {}

  int exponent_ = 1;
  std::vector<std::pair<Rational, Rational>> knots_;
};

/// Unordered-pair sum of g(d(a, b)) over the subset.
[[nodiscard]] Rational sigma_g(const FiniteMetricSpace& space, std::span<const Index> subset,
                               const MonotoneGauge& g);

}  // namespace plastic
