#include "plastic/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "margin_table.hpp"
#include "plastic/separation.hpp"

namespace plastic {

Rational Measurement::operator()(const FiniteMetricSpace& space) const {
  const IndexSet all = all_points(space);
  return gauge_ ? sigma_g(space, all, *gauge_) : sigma(space, all);
}

std::string Measurement::describe() const { return gauge_ ? "sigma_g[" + gauge_->describe() + "]" : "sigma"; }

MeasurementReport proper_measurement_check(std::span<const FiniteMetricSpace> catalog, const Measurement& psi) {
  if (catalog.empty()) return {};
  const std::size_t n = catalog.front().size();
  if (n < 2) throw std::invalid_argument("proper measurement check needs spaces with at least two points");
  for (const auto& space : catalog) {
    if (space.size() != n) throw std::invalid_argument("catalog mixes spaces of different cardinalities");
  }
  std::vector<Rational> values;
  values.reserve(catalog.size());
  for (const auto& space : catalog) values.push_back(psi(space));

  MeasurementReport report;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = 0; j < catalog.size(); ++j) {
      ++report.pairs_checked;
      // Between equal-size spaces every expansion is a noncontractive map
      // that strictly increases some distance.
      PlasticityCheck check = is_strongly_plastic(catalog[i], catalog[j]);
      if (check.holds) continue;
      ++report.expansions_found;
      if (!(values[j] > values[i])) {
        report.violations.push_back({i, j, values[i], values[j], std::move(*check.counterexample)});
      }
    }
  }
  return report;
}

SurjectionTheoremReport verify_surjection_theorem(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  SurjectionTheoremReport report;
  Rational where;
  report.hypothesis_holds = alpha_dominated(x, y, &where);
  if (!report.hypothesis_holds) {
    report.hypothesis_fails_at = where;
    return report;
  }
  const detail::MarginTable table(x, y);
  const auto nonneg = table.at_least(Rational{});
  const bool same_size = x.size() == y.size();
  std::optional<std::vector<Index>> bad;
  report.surjections_checked = for_each_map(x, y, MapClass::kNonexpansiveSurjections, [&](std::span<const Index> t) {
    // Nonexpansive already; an isometry must also be noncontractive and bijective.
    bool isometry = same_size;
    for (Index a = 0; isometry && a < x.size(); ++a) {
      for (Index b = a + 1; b < x.size(); ++b) {
        if (table.at(a, b, t[a], t[b]) < nonneg) {
          isometry = false;
          break;
        }
      }
    }
    if (!isometry) {
      bad.emplace(t.begin(), t.end());
      return false;
    }
    return true;
  });
  if (bad) report.counterexample = PointMap(x, y, *bad);
  return report;
}

SeparatedImageReport verify_separated_image_lemma(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                  const Rational& eps, const PointMap& f,
                                                  std::span<const Index> a) {
  if (!(f.domain() == x) || !(f.codomain() == y)) {
    throw std::invalid_argument("separated-image check: map does not go from X to Y");
  }
  SeparatedImageReport report;
  check_subset(x, a);
  report.s_x = s_max(x, eps).value;
  report.s_y = s_max(y, eps).value;
  report.sigma_a = sigma(x, a);
  if (!classify(f).noncontractive) {
    report.reason = "f is not noncontractive";
    return report;
  }
  if (a.size() < 2) {
    report.reason = "|A| < 2";
    return report;
  }
  if (!is_eps_separated(x, a, eps)) {
    report.reason = "A is not eps-separated";
    return report;
  }
  if (!(report.sigma_a > report.s_x - eps)) {
    report.reason = "sigma(A) <= s(X, eps) - eps";
    return report;
  }
  if (!(report.s_x > report.s_y - eps)) {
    report.reason = "s(X, eps) <= s(Y, eps) - eps";
    return report;
  }
  report.applicable = true;
  for (Index i : a) report.image.push_back(f(i));
  std::sort(report.image.begin(), report.image.end());
  report.image.erase(std::unique(report.image.begin(), report.image.end()), report.image.end());
  report.image_maximal = is_eps_separated(y, report.image, eps) && is_maximal_separated(y, report.image, eps);
  return report;
}

SComparisonReport verify_s_comparison_plasticity(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  SComparisonReport report;
  Rational where;
  report.hypothesis_holds = s_dominates(x, y, &where);
  if (!report.hypothesis_holds) {
    report.hypothesis_fails_at = where;
    return report;
  }
  report.plasticity = is_strongly_plastic(x, y);
  return report;
}

ConclusionCheck verify_contraction_conclusion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                              const Rational& level, const Rational& delta, Threshold threshold) {
  const detail::MarginTable table(x, y);
  const bool strict = threshold == Threshold::kStrict;
  // Premise: max D >= level (or > level). Conclusion: min D <= -delta (or < -delta).
  const auto premise = strict ? table.greater_than(level) : table.at_least(level);
  const auto conclusion = strict ? table.at_least(-delta) : table.greater_than(-delta);

  ConclusionCheck out;
  std::optional<std::vector<Index>> bad;
  out.maps_checked = for_each_map(x, y, MapClass::kAllMaps, [&](std::span<const Index> t) {
    detail::RankExtremes e;
    for (Index a = 0; a < x.size(); ++a) {
      for (Index b = a + 1; b < x.size(); ++b) {
        const auto r = table.at(a, b, t[a], t[b]);
        e.max = std::max(e.max, r);
        e.min = std::min(e.min, r);
      }
    }
    if (e.max < premise) return true;
    ++out.maps_triggered;
    if (e.min < conclusion) return true;
    bad.emplace(t.begin(), t.end());
    return false;
  });
  if (bad) {
    out.holds = false;
    out.counterexample = PointMap(x, y, *bad);
  }
  return out;
}

ConclusionCheck verify_certified_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                       const CertifiedDelta& certificate) {
  if (!certificate.applicable) {
    throw std::invalid_argument("certificate is not applicable: " + certificate.reason);
  }
  if (certificate.eps0) {
    return verify_contraction_conclusion(x, y, certificate.eps, certificate.delta, Threshold::kStrict);
  }
  return verify_contraction_conclusion(x, y, certificate.eps, certificate.delta, Threshold::kNonStrict);
}

}  // namespace plastic
