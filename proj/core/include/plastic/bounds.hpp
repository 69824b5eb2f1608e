#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plastic/metric_space.hpp"
#include "plastic/rational.hpp"

namespace plastic {

/// M(N) by its closed piecewise form:
///   k(k+1)          for N = 2k+1, k >= 2
///   (2k-1)(2k+1)    for N = 4k,   k >= 2
///   (2k-1)(2k+3)    for N = 4k+2, k >= 2
///   N               otherwise.
/// Throws std::invalid_argument for N < 2.
[[nodiscard]] std::int64_t m_of_n(std::int64_t n);

/// M(N) as max{ max_{l+m<=N} lcm(l, m), N } by direct double loop.
[[nodiscard]] std::int64_t m_bruteforce(std::int64_t n);

/// eps / (N(N-1)/2 - 1). Throws std::domain_error for N < 3, where the
/// denominator vanishes.
[[nodiscard]] Rational bound_pair_sum(std::int64_t n, const Rational& eps);

/// eps / (M(N) - 1), the orbit-period lower bound for bijections of a space
/// with at most N points. Throws std::invalid_argument for N < 2.
[[nodiscard]] Rational bound_orbit(std::int64_t n, const Rational& eps);

/// 2 eps / (11 (n (n - 1) + 2)) with n the minimum size of an (eps/11)-net.
[[nodiscard]] Rational nitka_bound(const FiniteMetricSpace& space, const Rational& eps);

/// A certified contraction margin for maps X -> Y. When `applicable`:
///   0 < delta < min{ eps/(N(N-1)-6), eps/(9(N+1)) },  nu < eps/18,
///   s(X, eps/9) >= s(Y, eps/9 - delta) - nu > 0,
/// where eps is `eps0` if set and N = N(X, eps/9). `reason` names the failed
/// hypothesis otherwise.
struct CertifiedDelta {
  Rational eps;
  std::optional<Rational> eps0;
  Rational delta;
  Rational nu;
  bool applicable = false;
  std::string reason;
  std::size_t n_sep = 0;  // N(X, level/9)
  Rational s_x;           // s(X, level/9)
  Rational s_y;           // s(Y, level/9 - delta)

  /// The level the inequalities refer to: eps0 when present, else eps.
  [[nodiscard]] const Rational& level() const { return eps0 ? *eps0 : eps; }
};

/// Largest delta, over the finitely many candidates where s(Y, eps/9 - .)
/// changes value, for which the hypotheses hold with minimal
/// nu = max(0, s(Y, eps/9 - delta) - s(X, eps/9)). Maps with an expansion
/// >= eps then contract some pair by >= delta.
[[nodiscard]] CertifiedDelta certify_separated_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                     const Rational& eps);

/// For s(X, .) >= s(Y, .) and 0 < eps < diam(Y): picks eps0 < eps with
/// eps0/9 off Y's breakpoints, the gap Delta down to the next breakpoint, and
/// delta0 = min{Delta, eps0/(N(N-1)-6), eps0/(9(N+1))} / 2 with nu0 = 0.
/// Maps with an expansion > eps then contract some pair by > delta0.
[[nodiscard]] CertifiedDelta certify_plasticity_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                      const Rational& eps);

/// True iff s(X, t) >= s(Y, t) at every profile sample point of either space
/// (hence for all t > 0). On failure `*where` receives a failing t.
[[nodiscard]] bool s_dominates(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                               Rational* where = nullptr);

/// True iff alpha(X, t) <= alpha(Y, t) at every profile sample point of
/// either space (hence for all t > 0).
[[nodiscard]] bool alpha_dominated(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                   Rational* where = nullptr);

}  // namespace plastic
