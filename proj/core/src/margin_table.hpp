#pragma once

// Order-preserving integer encoding of every distance change a map X -> Y can
// produce. D(a, b, u, v) = d_Y(u, v) - d_X(a, b); each D is replaced by its
// rank among the distinct values, so the expansion E(f) = max D and the
// contraction C(f) = -min D over the pairs of f become integer max/min
// computations. Thresholds are translated into rank cut-offs once.

#include <cstdint>
#include <vector>

#include "plastic/metric_space.hpp"
#include "plastic/rational.hpp"

namespace plastic::detail {

class MarginTable {
 public:
  using Rank = std::int32_t;
  static constexpr Rank kNoPairsMax = -1;
  static constexpr Rank kNoPairsMin = INT32_MAX;

  MarginTable(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

  [[nodiscard]] std::size_t nx() const { return nx_; }
  [[nodiscard]] std::size_t ny() const { return ny_; }

  /// Rank of d_Y(u, v) - d_X(a, b), for a < b.
  [[nodiscard]] Rank at(Index a, Index b, Index u, Index v) const {
    return ranks_[((a * nx_ + b) * ny_ + u) * ny_ + v];
  }
  [[nodiscard]] const Rational& value(Rank r) const { return values_[static_cast<std::size_t>(r)]; }

  /// D > t  <=>  rank >= greater_than(t).
  [[nodiscard]] Rank greater_than(const Rational& t) const;
  /// D >= t  <=>  rank >= at_least(t).
  [[nodiscard]] Rank at_least(const Rational& t) const;

 private:
  std::size_t nx_;
  std::size_t ny_;
  std::vector<Rational> values_;
  std::vector<Rank> ranks_;
};

/// Running extremes of the ranks over the pairs assigned so far.
struct RankExtremes {
  MarginTable::Rank max = MarginTable::kNoPairsMax;
  MarginTable::Rank min = MarginTable::kNoPairsMin;
};

/// Extremes after appending point k -> c to a partial table.
inline RankExtremes extend(const MarginTable& t, const std::vector<Index>& table, Index k, Index c,
                           RankExtremes e) {
  for (Index a = 0; a < k; ++a) {
    const MarginTable::Rank r = t.at(a, k, table[a], c);
    if (r > e.max) e.max = r;
    if (r < e.min) e.min = r;
  }
  return e;
}

}  // namespace plastic::detail
