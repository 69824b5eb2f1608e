#include "margin_table.hpp"

#include <algorithm>

namespace plastic::detail {

MarginTable::MarginTable(const FiniteMetricSpace& x, const FiniteMetricSpace& y)
    : nx_(x.size()), ny_(y.size()) {
  // Distinct distances on each side, then every difference between them.
  std::vector<Rational> dy{Rational{}};
  dy.insert(dy.end(), y.distances().begin(), y.distances().end());
  std::vector<Rational> dx = x.distances();
  for (const auto& v : dy) {
    for (const auto& w : dx) values_.push_back(v - w);
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());

  const auto rank_of = [&](const Rational& v) {
    return static_cast<Rank>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
  };
  ranks_.assign(nx_ * nx_ * ny_ * ny_, 0);
  for (Index a = 0; a < nx_; ++a) {
    for (Index b = a + 1; b < nx_; ++b) {
      for (Index u = 0; u < ny_; ++u) {
        for (Index v = 0; v < ny_; ++v) {
          ranks_[((a * nx_ + b) * ny_ + u) * ny_ + v] = rank_of(y.d(u, v) - x.d(a, b));
        }
      }
    }
  }
}

MarginTable::Rank MarginTable::greater_than(const Rational& t) const {
  return static_cast<Rank>(std::upper_bound(values_.begin(), values_.end(), t) - values_.begin());
}

MarginTable::Rank MarginTable::at_least(const Rational& t) const {
  return static_cast<Rank>(std::lower_bound(values_.begin(), values_.end(), t) - values_.begin());
}

}  // namespace plastic::detail
