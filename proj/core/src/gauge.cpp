#include "plastic/gauge.hpp"

#include <sstream>
#include <stdexcept>

namespace plastic {

MonotoneGauge MonotoneGauge::power(int k) {
  if (k < 1) throw std::invalid_argument("power gauge needs exponent >= 1, got " + std::to_string(k));
  return MonotoneGauge(k, {});
}

MonotoneGauge MonotoneGauge::piecewise_linear(std::vector<std::pair<Rational, Rational>> knots) {
  if (knots.empty()) throw std::invalid_argument("piecewise-linear gauge needs at least one knot");
  Rational prev_t;
  Rational prev_g;
  for (const auto& [t, g] : knots) {
    if (t <= prev_t) {
      throw std::invalid_argument("gauge knots must have strictly increasing positive abscissae (at t = " +
                                  t.str() + ")");
    }
    if (g <= prev_g) {
      throw std::invalid_argument("gauge must be strictly increasing with g(0) = 0 (at t = " + t.str() + ")");
    }
    prev_t = t;
    prev_g = g;
  }
  return MonotoneGauge(0, std::move(knots));
}

Rational MonotoneGauge::operator()(const Rational& t) const {
  if (t.sign() < 0) throw std::invalid_argument("gauge evaluated at negative argument " + t.str());
  if (knots_.empty()) {
    Rational out = 1;
    for (int i = 0; i < exponent_; ++i) out *= t;
    return out;
  }
  Rational t0;
  Rational g0;
  for (const auto& [t1, g1] : knots_) {
    if (t <= t1) return g0 + (g1 - g0) * (t - t0) / (t1 - t0);
    t0 = t1;
    g0 = g1;
  }
  // Past the last knot: continue with the final slope.
  const auto& [ta, ga] = knots_.size() >= 2 ? knots_[knots_.size() - 2] : std::pair<Rational, Rational>{};
  const auto& [tb, gb] = knots_.back();
  return gb + (gb - ga) * (t - tb) / (tb - ta);
}

std::string MonotoneGauge::describe() const {
  std::ostringstream out;
  if (knots_.empty()) {
    out << "t^" << exponent_;
  } else {
    out << "pwl(";
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      if (i) out << ',';
      out << knots_[i].first << ':' << knots_[i].second;
    }
    out << ')';
  }
  return out.str();
}

Rational sigma_g(const FiniteMetricSpace& space, std::span<const Index> subset, const MonotoneGauge& g) {
  check_subset(space, subset);
  Rational total;
  for (std::size_t p = 0; p < subset.size(); ++p) {
    for (std::size_t q = p + 1; q < subset.size(); ++q) total += g(space.d(subset[p], subset[q]));
  }
  return total;
}

}  // namespace plastic
