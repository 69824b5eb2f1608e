#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plastic/metric_space.hpp"
#include "plastic/rational.hpp"

namespace plastic {

/// Largest space the subset searches accept (one bit per point).
inline constexpr std::size_t kMaxSearchPoints = 64;

// Conventions, fixed throughout the library:
//   eps-net:       every point is at distance STRICTLY below eps from the set;
//   eps-separated: all pairwise distances are >= eps (singletons always are).

/// Throws std::invalid_argument unless eps > 0.
[[nodiscard]] bool is_eps_net(const FiniteMetricSpace& space, std::span<const Index> subset,
                              const Rational& eps);

/// Throws std::invalid_argument for an empty subset or eps <= 0.
[[nodiscard]] bool is_eps_separated(const FiniteMetricSpace& space, std::span<const Index> subset,
                                    const Rational& eps);

/// True iff no outside point is at distance >= eps from every member.
/// Throws std::invalid_argument if the subset is not eps-separated.
[[nodiscard]] bool is_maximal_separated(const FiniteMetricSpace& space, std::span<const Index> subset,
                                        const Rational& eps);

struct SubsetCount {
  std::size_t count = 0;
  IndexSet witness;
};

struct SubsetValue {
  Rational value;
  IndexSet witness;
};

// The four searches below are exact. Witnesses are the lexicographically
// smallest optimal index sets. Spaces above kMaxSearchPoints are rejected
// with std::length_error.

/// N(X, eps): maximum size of an eps-separated subset.
[[nodiscard]] SubsetCount n_sep_max(const FiniteMetricSpace& space, const Rational& eps);

/// s(X, eps): maximum of sigma over eps-separated subsets.
[[nodiscard]] SubsetValue s_max(const FiniteMetricSpace& space, const Rational& eps);

/// n(eps): minimum size of an eps-net.
[[nodiscard]] SubsetCount n_net_min(const FiniteMetricSpace& space, const Rational& eps);

/// alpha(X, eps): minimum of sigma over eps-nets.
[[nodiscard]] SubsetValue alpha_min(const FiniteMetricSpace& space, const Rational& eps);

struct ProfileSample {
  Rational eps;
  SubsetValue s;
  SubsetValue alpha;
  SubsetCount n_sep;
  SubsetCount n_net;
};

/// s, alpha, N and n tabulated at every distance breakpoint, at the midpoint
/// of each pair of consecutive breakpoints, and at diam + 1. All four are
/// constant on (0, b_1], on each (b_i, b_{i+1}] and on (b_max, inf), so the
/// table determines them everywhere.
struct SeparationProfile {
  std::vector<Rational> breakpoints;
  std::vector<ProfileSample> samples;  // ascending eps

  /// Exact value at any eps > 0 by interval lookup.
  [[nodiscard]] const ProfileSample& at(const Rational& eps) const;
};

/// Throws std::logic_error if a monotonicity invariant fails.
[[nodiscard]] SeparationProfile profile(const FiniteMetricSpace& space);

/// Sample points of the profile: breakpoints, midpoints, diam + 1.
[[nodiscard]] std::vector<Rational> profile_sample_points(const FiniteMetricSpace& space);

}  // namespace plastic
