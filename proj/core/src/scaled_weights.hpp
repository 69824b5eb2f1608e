#pragma once

// Integer rescaling of a distance matrix. When every distance times the
// common denominator fits comfortably in 64 bits, the subset searches run on
// int64 sums; otherwise they fall back to Rational arithmetic.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "plastic/metric_space.hpp"

namespace plastic::detail {

template <typename W>
struct Weights {
  std::size_t n = 0;
  std::vector<W> w;
  mpz_class scale = 1;  // W value v stands for v / scale

  [[nodiscard]] const W& operator()(Index i, Index j) const { return w[i * n + j]; }
  [[nodiscard]] Rational to_rational(const W& v) const {
    if constexpr (std::is_same_v<W, Rational>) {
      return v;
    } else {
      return Rational(mpz_class(static_cast<long>(v)), scale);
    }
  }
};

inline std::optional<Weights<std::int64_t>> integer_weights(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  mpz_class scale = 1;
  for (const auto& d : space.distances()) {
    const mpz_class den = d.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  // Sums of at most n^2 / 2 entries must stay far from overflow.
  const mpz_class limit = mpz_class(std::numeric_limits<std::int64_t>::max() / 4) / mpz_class(static_cast<long>(n * n + 1));
  Weights<std::int64_t> out;
  out.n = n;
  out.scale = scale;
  out.w.assign(n * n, 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const mpz_class v = space.d(i, j).numerator() * (scale / space.d(i, j).denominator());
      if (v > limit) return std::nullopt;
      out.w[i * n + j] = v.get_si();
    }
  }
  return out;
}

inline Weights<Rational> rational_weights(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  Weights<Rational> out;
  out.n = n;
  out.w.resize(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out.w[i * n + j] = space.d(i, j);
  }
  return out;
}

/// Calls fn(weights) with the fastest exact representation available.
template <typename Fn>
decltype(auto) with_weights(const FiniteMetricSpace& space, Fn&& fn) {
  if (auto ints = integer_weights(space)) return fn(*ints);
  return fn(rational_weights(space));
}

}  // namespace plastic::detail
