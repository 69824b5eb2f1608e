#pragma once

#include <string>
#include <vector>

#include "plastic/constructions.hpp"
#include "plastic/metric_space.hpp"
#include "plastic/random_spaces.hpp"

namespace fixtures {

using plastic::FiniteMetricSpace;
using plastic::Rational;

/// Space from the strict upper triangle, row by row; labels p0, p1, ...
inline FiniteMetricSpace from_upper(std::size_t n, const std::vector<Rational>& upper) {
  plastic::SpaceData data;
  data.dist.assign(n, std::vector<Rational>(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    data.labels.push_back("p" + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      data.dist[i][j] = upper.at(k);
      data.dist[j][i] = upper.at(k);
      ++k;
    }
  }
  return FiniteMetricSpace::create(std::move(data));
}

inline FiniteMetricSpace two_point(const Rational& d) { return from_upper(2, {d}); }

inline FiniteMetricSpace equi(std::size_t n, const Rational& side) { return plastic::equilateral(n, side); }

inline FiniteMetricSpace random_space(std::uint64_t seed, std::size_t n) {
  plastic::InstanceGenerator gen(seed);
  return gen.band_space(n);
}

}  // namespace fixtures
