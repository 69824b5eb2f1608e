#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "plastic/hilbert.hpp"
#include "plastic/metric_space.hpp"

namespace plastic {

/// Seeded source of reproducible instances. Draws use only raw mt19937_64
/// output, so sequences agree across standard libraries.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// n points with every distance 1 + k/denominator, k uniform in
  /// [0, denominator]. All distances lie in [1, 2], so the triangle
  /// inequality holds automatically. Labels are p0, p1, ...
  FiniteMetricSpace band_space(std::size_t n, std::int64_t denominator = 12);

  /// Vector with `dims` coordinates k/denominator, rescaled towards 0 until
  /// its norm is at most 1.
  BallVector ball_vector(std::size_t dims, std::int64_t denominator = 10);

 private:
  std::mt19937_64 engine_;
};

}  // namespace plastic
