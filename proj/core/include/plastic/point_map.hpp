#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plastic/metric_space.hpp"
#include "plastic/rational.hpp"

namespace plastic {

using IndexPair = std::pair<Index, Index>;

/// A total function between two finite metric spaces stored as an index
/// table: point i of the domain goes to point table()[i] of the codomain.
class PointMap {
 public:
  /// Throws std::invalid_argument if the table length differs from the
  /// domain size or an entry is not a codomain index.
  PointMap(FiniteMetricSpace domain, FiniteMetricSpace codomain, std::vector<Index> table);

  static PointMap identity(const FiniteMetricSpace& space);

  [[nodiscard]] const FiniteMetricSpace& domain() const { return domain_; }
  [[nodiscard]] const FiniteMetricSpace& codomain() const { return codomain_; }
  [[nodiscard]] const std::vector<Index>& table() const { return table_; }
  [[nodiscard]] Index operator()(Index i) const { return table_.at(i); }

 private:
  FiniteMetricSpace domain_;
  FiniteMetricSpace codomain_;
  std::vector<Index> table_;
};

/// Expansion E(f) = max over unordered pairs of d(f a, f b) - d(a, b) and
/// contraction C(f) = max of d(a, b) - d(f a, f b), each with the first
/// (lexicographically smallest) pair attaining it.
struct MapMargins {
  Rational expansion;
  Rational contraction;
  IndexPair expansion_pair;
  IndexPair contraction_pair;
};

/// Throws std::invalid_argument for a singleton domain.
[[nodiscard]] MapMargins margins(const PointMap& f);

struct MapClassification {
  bool noncontractive = false;
  bool nonexpansive = false;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  bool isometric_embedding = false;
  bool isometry = false;
  /// Noncontractive and strictly increases at least one distance.
  bool expansion = false;
};

/// Valid for every domain size; a singleton domain has no pairs, so it is
/// trivially noncontractive, nonexpansive and isometric.
[[nodiscard]] MapClassification classify(const PointMap& f);

/// outer ∘ inner. Throws std::invalid_argument unless inner's codomain is
/// outer's domain.
[[nodiscard]] PointMap compose(const PointMap& outer, const PointMap& inner);

}  // namespace plastic
