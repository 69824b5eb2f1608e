#pragma once

// Seeded property suites over random finite instances. Each suite draws its
// instances from one generator seeded with the given seed, so results are
// reproducible; a failure carries the offending instance as JSON.

#include <cstdint>
#include <string>

#include "plastic/io.hpp"

namespace plastic::cli {

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  bool passed = true;
  std::size_t instances = 0;  // accepted instances
  std::size_t attempts = 0;   // drawn instances, including rejected ones
  std::uint64_t checks = 0;   // suite-specific unit (maps, pairs, eps values)
  std::string detail;
  io::Json failure;  // null when passed

  [[nodiscard]] io::Json to_json() const;
};

/// Equal-size pairs with sigma(Y) <= sigma(X): the bijection modulus is
/// never NotPlastic and is at least eps / (N(N-1)/2 - 1) on a grid of eps
/// values derived from the margin breakpoints.
SuiteResult suite_pair_sum_bound(std::uint64_t seed, std::size_t pairs, std::size_t points);

/// X = X, AllMaps: every finite Value is at least the separation-based bound.
SuiteResult suite_nitka_bound(std::uint64_t seed, std::size_t spaces, std::size_t points);

/// sigma and sigma_g (g = t^2, t^3) are proper on a random catalog.
SuiteResult suite_proper_measurements(std::uint64_t seed, std::size_t catalog, std::size_t points);

/// s(X, .) >= s(Y, .) everywhere implies strong plasticity.
SuiteResult suite_s_comparison(std::uint64_t seed, std::size_t pairs, std::size_t max_points);

/// alpha(X, .) <= alpha(Y, .) everywhere implies every nonexpansive
/// surjection X -> Y is an isometry.
SuiteResult suite_surjection_rigidity(std::uint64_t seed, std::size_t pairs, std::size_t max_points);

/// Lemma-style certificates on X = X, checked by full map enumeration.
SuiteResult suite_lemma_certificate(std::uint64_t seed, std::size_t spaces, std::size_t min_points,
                                    std::size_t max_points);

/// Theorem-style certificates on X = X, checked by full map enumeration.
SuiteResult suite_theorem_certificate(std::uint64_t seed, std::size_t spaces, std::size_t min_points,
                                      std::size_t max_points);

/// Breakpoints of the map modulus in eps: the distinct positive values of
/// dY(u, v) - dX(a, b), their midpoints, and half the smallest one.
std::vector<Rational> modulus_eps_grid(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

}  // namespace plastic::cli
