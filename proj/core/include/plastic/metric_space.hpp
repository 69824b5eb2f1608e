#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plastic/rational.hpp"

namespace plastic {

using Index = std::size_t;
/// Sorted, duplicate-free list of point indices.
using IndexSet = std::vector<Index>;

/// Unvalidated input for a finite metric space.
struct SpaceData {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist;
};

enum class Axiom {
  kOk,
  kDimension,
  kDuplicateLabel,
  kDiagonal,
  kPositivity,
  kSymmetry,
  kTriangle,
};

[[nodiscard]] const char* to_string(Axiom axiom);

/// Outcome of checking the metric axioms. On failure `witness` holds the
/// offending index tuple: (i) for the diagonal, (i, j) for positivity and
/// symmetry, (i, j, k) for dist[i][k] > dist[i][j] + dist[j][k], and the two
/// positions of a repeated label.
struct ValidationReport {
  Axiom violation = Axiom::kOk;
  std::vector<Index> witness;
  std::string message;

  [[nodiscard]] bool ok() const { return violation == Axiom::kOk; }
};

/// Checks dimensions, label uniqueness, then the metric axioms in the order
/// diagonal, positivity, symmetry, triangle inequality; stops at the first
/// violation.
[[nodiscard]] ValidationReport validate(const SpaceData& data);

class InvalidSpace : public std::invalid_argument {
 public:
  explicit InvalidSpace(ValidationReport report);
  [[nodiscard]] const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated, immutable finite metric space. Copies share storage.
class FiniteMetricSpace {
 public:
  /// Throws InvalidSpace if `data` violates any axiom.
  static FiniteMetricSpace create(SpaceData data);

  [[nodiscard]] std::size_t size() const { return impl_->labels.size(); }
  [[nodiscard]] const std::string& label(Index i) const { return impl_->labels.at(i); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return impl_->labels; }
  [[nodiscard]] std::optional<Index> index_of(std::string_view label) const;

  [[nodiscard]] const Rational& d(Index i, Index j) const { return impl_->dist[i * size() + j]; }

  /// Sorted distinct positive pairwise distances (empty for a single point).
  [[nodiscard]] const std::vector<Rational>& distances() const { return impl_->distinct; }
  /// Zero for a single point.
  [[nodiscard]] Rational diameter() const;
  /// Smallest positive distance; nullopt for a single point.
  [[nodiscard]] std::optional<Rational> min_distance() const;

  [[nodiscard]] SpaceData data() const;

  /// Same object, or identical labels and distances.
  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<Rational> dist;
    std::vector<Rational> distinct;
  };
  explicit FiniteMetricSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Throws std::invalid_argument unless every index is in range and the list
/// has no repeats; empty lists are rejected unless `allow_empty`.
void check_subset(const FiniteMetricSpace& space, std::span<const Index> subset,
                  bool allow_empty = false);

/// Sum of d(a, b) over unordered pairs {a, b} of the subset, each pair once.
/// A singleton gives 0; the empty subset is rejected.
[[nodiscard]] Rational sigma(const FiniteMetricSpace& space, std::span<const Index> subset);

/// sigma over every point of the space.
[[nodiscard]] Rational sigma(const FiniteMetricSpace& space);

/// Indices 0..n-1.
[[nodiscard]] IndexSet all_points(const FiniteMetricSpace& space);

}  // namespace plastic
