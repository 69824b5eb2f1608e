#include "plastic/random_spaces.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace plastic {

std::int64_t InstanceGenerator::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return lo + static_cast<std::int64_t>(r % span);
}

FiniteMetricSpace InstanceGenerator::band_space(std::size_t n, std::int64_t denominator) {
  if (n == 0) throw std::invalid_argument("band_space: n must be positive");
  if (denominator < 1) throw std::invalid_argument("band_space: denominator must be positive");
  SpaceData data;
  data.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data.labels.push_back("p" + std::to_string(i));
  data.dist.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational d = Rational(1) + Rational(uniform(0, denominator), denominator);
      data.dist[i][j] = d;
      data.dist[j][i] = d;
    }
  }
  return FiniteMetricSpace::create(std::move(data));
}

BallVector InstanceGenerator::ball_vector(std::size_t dims, std::int64_t denominator) {
  if (denominator < 1) throw std::invalid_argument("ball_vector: denominator must be positive");
  BallVector v(dims);
  for (auto& c : v) c = Rational(uniform(-denominator, denominator), denominator);
  // Halve until inside the unit ball; keeps coordinates rational.
  while (squared_norm(v) > Rational(1)) {
    for (auto& c : v) c /= Rational(2);
  }
  return v;
}

}  // namespace plastic
