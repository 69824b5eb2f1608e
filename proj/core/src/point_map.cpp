#include "plastic/point_map.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace plastic {

PointMap::PointMap(FiniteMetricSpace domain, FiniteMetricSpace codomain, std::vector<Index> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) {
    throw std::invalid_argument("map table has " + std::to_string(table_.size()) + " entries for a " +
                                std::to_string(domain_.size()) + "-point domain");
  }
  for (Index i = 0; i < table_.size(); ++i) {
    if (table_[i] >= codomain_.size()) {
      throw std::invalid_argument("map sends point " + std::to_string(i) + " to " + std::to_string(table_[i]) +
                                  ", outside the " + std::to_string(codomain_.size()) + "-point codomain");
    }
  }
}

PointMap PointMap::identity(const FiniteMetricSpace& space) {
  std::vector<Index> table(space.size());
  std::iota(table.begin(), table.end(), Index{0});
  return PointMap(space, space, std::move(table));
}

MapMargins margins(const PointMap& f) {
  const auto& x = f.domain();
  const auto& y = f.codomain();
  if (x.size() < 2) throw std::invalid_argument("margins need a domain with at least two points");
  MapMargins out;
  bool first = true;
  for (Index a = 0; a < x.size(); ++a) {
    for (Index b = a + 1; b < x.size(); ++b) {
      const Rational grow = y.d(f(a), f(b)) - x.d(a, b);
      const Rational shrink = -grow;
      if (first || grow > out.expansion) {
        out.expansion = grow;
        out.expansion_pair = {a, b};
      }
      if (first || shrink > out.contraction) {
        out.contraction = shrink;
        out.contraction_pair = {a, b};
      }
      first = false;
    }
  }
  return out;
}

MapClassification classify(const PointMap& f) {
  const auto& table = f.table();
  const std::size_t n = f.domain().size();
  const std::size_t m = f.codomain().size();

  MapClassification c;
  std::vector<bool> hit(m, false);
  std::size_t distinct = 0;
  for (Index v : table) {
    if (!hit[v]) {
      hit[v] = true;
      ++distinct;
    }
  }
  c.injective = distinct == n;
  c.surjective = distinct == m;
  c.bijective = c.injective && c.surjective;

  if (n < 2) {
    c.noncontractive = c.nonexpansive = c.isometric_embedding = true;
  } else {
    const MapMargins mm = margins(f);
    c.noncontractive = mm.contraction.sign() <= 0;
    c.nonexpansive = mm.expansion.sign() <= 0;
    c.isometric_embedding = c.noncontractive && c.nonexpansive;
    c.expansion = c.noncontractive && mm.expansion.sign() > 0;
  }
  c.isometry = c.isometric_embedding && c.bijective;
  return c;
}

PointMap compose(const PointMap& outer, const PointMap& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw std::invalid_argument("cannot compose: inner codomain is not the outer domain");
  }
  std::vector<Index> table(inner.table().size());
  for (Index i = 0; i < table.size(); ++i) table[i] = outer(inner(i));
  return PointMap(inner.domain(), outer.codomain(), std::move(table));
}

}  // namespace plastic
