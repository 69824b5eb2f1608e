#include "plastic/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plastic/separation.hpp"

namespace plastic {

namespace {

std::vector<Rational> union_sample_points(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  std::set<Rational> points;
  for (auto& t : profile_sample_points(x)) points.insert(t);
  for (auto& t : profile_sample_points(y)) points.insert(t);
  return {points.begin(), points.end()};
}

CertifiedDelta not_applicable(CertifiedDelta c, std::string reason) {
  c.applicable = false;
  c.reason = std::move(reason);
  return c;
}

}  // namespace

std::int64_t m_of_n(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("M(N) needs N >= 2, got " + std::to_string(n));
  if (n % 2 == 1) {
    const std::int64_t k = (n - 1) / 2;
    if (k >= 2) return k * (k + 1);
  } else if (n % 4 == 0) {
    const std::int64_t k = n / 4;
    if (k >= 2) return (2 * k - 1) * (2 * k + 1);
  } else {
    const std::int64_t k = (n - 2) / 4;
    if (k >= 2) return (2 * k - 1) * (2 * k + 3);
  }
  return n;
}

std::int64_t m_bruteforce(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("M(N) needs N >= 2, got " + std::to_string(n));
  std::int64_t best = n;
  for (std::int64_t l = 1; l < n; ++l) {
    for (std::int64_t m = 1; l + m <= n; ++m) best = std::max(best, std::lcm(l, m));
  }
  return best;
}

Rational bound_pair_sum(std::int64_t n, const Rational& eps) {
  if (n < 3) {
    throw std::domain_error("pair-sum bound needs N >= 3: N(N-1)/2 - 1 = 0 for N = " + std::to_string(n));
  }
  return eps / Rational(n * (n - 1) / 2 - 1);
}

Rational bound_orbit(std::int64_t n, const Rational& eps) { return eps / Rational(m_of_n(n) - 1); }

Rational nitka_bound(const FiniteMetricSpace& space, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
  const auto n = static_cast<std::int64_t>(n_net_min(space, eps / 11).count);
  return 2 * eps / Rational(11 * (n * (n - 1) + 2));
}

bool s_dominates(const FiniteMetricSpace& x, const FiniteMetricSpace& y, Rational* where) {
  for (const Rational& t : union_sample_points(x, y)) {
    if (s_max(x, t).value < s_max(y, t).value) {
      if (where) *where = t;
      return false;
    }
  }
  return true;
}

bool alpha_dominated(const FiniteMetricSpace& x, const FiniteMetricSpace& y, Rational* where) {
  for (const Rational& t : union_sample_points(x, y)) {
    if (alpha_min(x, t).value > alpha_min(y, t).value) {
      if (where) *where = t;
      return false;
    }
  }
  return true;
}

CertifiedDelta certify_separated_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
  CertifiedDelta out;
  out.eps = eps;
  const Rational ninth = eps / 9;
  const auto sep = n_sep_max(x, ninth);
  out.n_sep = sep.count;
  const auto n = static_cast<std::int64_t>(sep.count);
  const std::int64_t den = n * (n - 1) - 6;
  if (den <= 0) {
    return not_applicable(out, "nonpositive denominator N(N-1)-6 with N(X, eps/9) = " + std::to_string(n));
  }
  const Rational threshold = min(eps / Rational(den), eps / Rational(9 * (n + 1)));
  out.s_x = s_max(x, ninth).value;

  // s(Y, eps/9 - delta) only changes where eps/9 - delta crosses a breakpoint
  // of Y; within a piece [c_k, c_{k+1}) of delta values it is constant.
  std::vector<Rational> cuts{Rational{}};
  for (const Rational& b : y.distances()) {
    if (b < ninth && b > ninth - threshold) cuts.push_back(ninth - b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(threshold);

  std::vector<Rational> candidates;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k].sign() > 0) candidates.push_back(cuts[k]);
    candidates.push_back((cuts[k] + cuts[k + 1]) / 2);
  }
  std::sort(candidates.begin(), candidates.end());

  const Rational nu_cap = eps / 18;
  std::string failure = "no admissible delta";
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Rational s_y = s_max(y, ninth - *it).value;
    const Rational nu = max(Rational{}, s_y - out.s_x);
    if (!(nu < nu_cap)) {
      failure = "nu = " + nu.str() + " would reach eps/18";
      continue;
    }
    if ((s_y - nu).sign() <= 0) {
      failure = "s(Y, eps/9 - delta) - nu is not positive";
      continue;
    }
    out.delta = *it;
    out.nu = nu;
    out.s_y = s_y;
    out.applicable = true;
    return out;
  }
  return not_applicable(out, failure);
}

CertifiedDelta certify_plasticity_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
  CertifiedDelta out;
  out.eps = eps;
  if (!(eps < y.diameter())) return not_applicable(out, "eps must lie in (0, diam Y)");
  Rational where;
  if (!s_dominates(x, y, &where)) return not_applicable(out, "s(X, t) < s(Y, t) at t = " + where.str());

  const auto& bps = y.distances();
  const auto is_breakpoint = [&](const Rational& t) { return std::binary_search(bps.begin(), bps.end(), t); };
  std::optional<Rational> eps0;
  for (std::int64_t denom = 64; denom >= 2 && !eps0; --denom) {
    const Rational candidate = eps * Rational(denom - 1, denom);
    if (!is_breakpoint(candidate / 9)) eps0 = candidate;
  }
  for (std::int64_t denom = 65; !eps0; ++denom) {
    const Rational candidate = eps * Rational(denom - 1, denom);
    if (!is_breakpoint(candidate / 9)) eps0 = candidate;
  }
  out.eps0 = eps0;
  const Rational ninth = *eps0 / 9;

  const auto below = std::lower_bound(bps.begin(), bps.end(), ninth);
  const Rational gap = below == bps.begin() ? ninth : ninth - *(below - 1);

  const auto sep = n_sep_max(x, ninth);
  out.n_sep = sep.count;
  const auto n = static_cast<std::int64_t>(sep.count);
  const std::int64_t den = n * (n - 1) - 6;
  if (den <= 0) {
    return not_applicable(out, "nonpositive denominator N(N-1)-6 with N(X, eps0/9) = " + std::to_string(n));
  }
  out.delta = min(gap, min(*eps0 / Rational(den), *eps0 / Rational(9 * (n + 1)))) / 2;

  out.s_x = s_max(x, ninth).value;
  out.s_y = s_max(y, ninth - out.delta).value;
  out.nu = max(Rational{}, out.s_y - out.s_x);
  if (!(out.nu < *eps0 / 18)) return not_applicable(out, "nu0 = " + out.nu.str() + " reaches eps0/18");
  if ((out.s_y - out.nu).sign() <= 0) return not_applicable(out, "s(Y, eps0/9 - delta0) - nu0 is not positive");
  out.applicable = true;
  return out;
}

}  // namespace plastic
