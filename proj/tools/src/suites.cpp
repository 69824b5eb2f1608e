#include "plastic_cli/suites.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plastic/bounds.hpp"
#include "plastic/random_spaces.hpp"
#include "plastic/search.hpp"
#include "plastic/separation.hpp"
#include "plastic/verify.hpp"

namespace plastic::cli {

namespace {

using io::Json;

/// Same space under a random relabelling and reordering of its points.
FiniteMetricSpace shuffled_copy(const FiniteMetricSpace& x, InstanceGenerator& gen) {
  std::vector<Index> order(x.size());
  std::iota(order.begin(), order.end(), Index{0});
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  SpaceData data;
  data.dist.assign(x.size(), std::vector<Rational>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    data.labels.push_back("q" + std::to_string(i));
    for (std::size_t j = 0; j < x.size(); ++j) data.dist[i][j] = x.d(order[i], order[j]);
  }
  return FiniteMetricSpace::create(std::move(data));
}

/// Shuffled copy of x with some distances moved by k/12 towards 1
/// (direction < 0) or towards 2 (direction > 0). Band spaces keep every
/// distance in [1, 2], so the result is still a metric.
FiniteMetricSpace nudged_copy(const FiniteMetricSpace& x, int direction, InstanceGenerator& gen) {
  const FiniteMetricSpace base = shuffled_copy(x, gen);
  SpaceData data = base.data();
  for (std::size_t i = 0; i < data.dist.size(); ++i) {
    for (std::size_t j = i + 1; j < data.dist.size(); ++j) {
      const Rational step(gen.uniform(0, 3), 12);
      Rational d = data.dist[i][j] + (direction < 0 ? -step : step);
      d = direction < 0 ? max(d, Rational(1)) : min(d, Rational(2));
      data.dist[i][j] = d;
      data.dist[j][i] = d;
    }
  }
  return FiniteMetricSpace::create(std::move(data));
}

Json pair_instance(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  return Json{{"x", io::to_json(x)}, {"y", io::to_json(y)}};
}

void fail(SuiteResult& r, Json failure, std::string detail) {
  r.passed = false;
  r.failure = std::move(failure);
  r.detail = std::move(detail);
}

}  // namespace

Json SuiteResult::to_json() const {
  Json out{{"name", name},
           {"verdict", passed ? "pass" : "fail"},
           {"instances", instances},
           {"attempts", attempts},
           {"checks", checks},
           {"detail", detail}};
  if (!failure.is_null()) out["failure"] = failure;
  return out;
}

std::vector<Rational> modulus_eps_grid(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  std::set<Rational> positive;
  for (Index a = 0; a < x.size(); ++a) {
    for (Index b = a + 1; b < x.size(); ++b) {
      for (Index u = 0; u < y.size(); ++u) {
        for (Index v = 0; v < y.size(); ++v) {
          const Rational diff = y.d(u, v) - x.d(a, b);
          if (diff.sign() > 0) positive.insert(diff);
        }
      }
    }
  }
  std::vector<Rational> grid;
  if (positive.empty()) return {Rational(1)};
  grid.push_back(*positive.begin() / Rational(2));
  const Rational* prev = nullptr;
  for (const Rational& b : positive) {
    if (prev) grid.push_back((*prev + b) / Rational(2));
    grid.push_back(b);
    prev = &b;
  }
  grid.push_back(*prev + Rational(1));
  return grid;
}

SuiteResult suite_pair_sum_bound(std::uint64_t seed, std::size_t pairs, std::size_t points) {
  SuiteResult r{"pair-sum bound"};
  InstanceGenerator gen(seed);
  std::size_t values = 0;
  for (; r.instances < pairs; ++r.instances) {
    ++r.attempts;
    FiniteMetricSpace x = gen.band_space(points);
    FiniteMetricSpace y = gen.band_space(points);
    if (sigma(y) > sigma(x)) std::swap(x, y);
    for (const Rational& eps : modulus_eps_grid(x, y)) {
      ++r.checks;
      const Rational bound = bound_pair_sum(static_cast<std::int64_t>(points), eps);
      const ModulusReport m = exact_modulus(x, y, eps, MapClass::kBijections);
      if (m.verdict == Verdict::kValue) ++values;
      if (m.verdict == Verdict::kNotPlastic || (m.value && *m.value < bound)) {
        Json failure = pair_instance(x, y);
        failure["eps"] = eps.str();
        failure["bound"] = bound.str();
        failure["report"] = io::to_json(m, x);
        fail(r, std::move(failure), "modulus below eps / (N(N-1)/2 - 1)");
        return r;
      }
    }
  }
  r.detail = std::to_string(values) + " finite values, all above the bound";
  return r;
}

SuiteResult suite_nitka_bound(std::uint64_t seed, std::size_t spaces, std::size_t points) {
  SuiteResult r{"separation-number bound"};
  InstanceGenerator gen(seed);
  std::size_t values = 0;
  for (; r.instances < spaces; ++r.instances) {
    ++r.attempts;
    const FiniteMetricSpace x = gen.band_space(points);
    for (const Rational& eps : modulus_eps_grid(x, x)) {
      ++r.checks;
      const ModulusReport m = exact_modulus(x, x, eps, MapClass::kAllMaps);
      if (m.verdict == Verdict::kVacuous) continue;
      ++values;
      const Rational bound = nitka_bound(x, eps);
      if (m.verdict == Verdict::kNotPlastic || *m.value < bound) {
        Json failure{{"x", io::to_json(x)}, {"eps", eps.str()}, {"bound", bound.str()}, {"report", io::to_json(m, x)}};
        fail(r, std::move(failure), "modulus below the separation-number bound");
        return r;
      }
    }
  }
  r.detail = std::to_string(values) + " finite values, all above the bound";
  return r;
}

SuiteResult suite_proper_measurements(std::uint64_t seed, std::size_t catalog, std::size_t points) {
  SuiteResult r{"proper measurements"};
  InstanceGenerator gen(seed);
  std::vector<FiniteMetricSpace> spaces;
  for (std::size_t i = 0; i < catalog; ++i) spaces.push_back(gen.band_space(points));
  r.instances = r.attempts = catalog;
  const std::vector<Measurement> measures{Measurement(), Measurement(MonotoneGauge::power(2)),
                                          Measurement(MonotoneGauge::power(3))};
  for (const auto& psi : measures) {
    const MeasurementReport m = proper_measurement_check(spaces, psi);
    r.checks += m.pairs_checked;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += psi.describe() + ": " + std::to_string(m.expansions_found) + " expansions";
    if (!m.proper()) {
      const auto& v = m.violations.front();
      Json failure = pair_instance(spaces[v.from], spaces[v.to]);
      failure["measurement"] = psi.describe();
      failure["psi_x"] = v.psi_from.str();
      failure["psi_y"] = v.psi_to.str();
      failure["expansion"] = io::to_json(v.expansion);
      fail(r, std::move(failure), psi.describe() + " does not grow along an expansion");
      return r;
    }
  }
  return r;
}

SuiteResult suite_s_comparison(std::uint64_t seed, std::size_t pairs, std::size_t max_points) {
  SuiteResult r{"s-comparison implies strong plasticity"};
  InstanceGenerator gen(seed);
  std::size_t derived_pairs = 0;
  const std::size_t budget = 500 * pairs;
  const auto top = static_cast<std::int64_t>(max_points);
  while (r.instances < pairs && r.attempts < budget) {
    ++r.attempts;
    const auto nx = static_cast<std::size_t>(gen.uniform(2, top));
    const FiniteMetricSpace x = gen.band_space(nx);
    // Half the codomains are shrunk copies of x, which satisfy the hypothesis.
    const bool derived = gen.uniform(0, 1) == 0;
    const FiniteMetricSpace y =
        derived ? nudged_copy(x, -1, gen)
                : gen.band_space(static_cast<std::size_t>(gen.uniform(static_cast<std::int64_t>(nx), top)));
    if (!s_dominates(x, y)) continue;
    if (derived) ++derived_pairs;
    ++r.instances;
    const PlasticityCheck check = is_strongly_plastic(x, y);
    r.checks += check.maps_checked;
    if (!check.holds) {
      Json failure = pair_instance(x, y);
      failure["expansion"] = io::to_json(*check.counterexample);
      fail(r, std::move(failure), "noncontractive map with a strict expansion under s-domination");
      return r;
    }
  }
  if (r.instances < pairs) {
    fail(r, nullptr, "only " + std::to_string(r.instances) + " qualifying pairs in " + std::to_string(budget) + " draws");
    return r;
  }
  r.detail = std::to_string(derived_pairs) + " shrunk copies, " + std::to_string(r.checks) + " maps visited";
  return r;
}

SuiteResult suite_surjection_rigidity(std::uint64_t seed, std::size_t pairs, std::size_t max_points) {
  SuiteResult r{"nonexpansive surjections are isometries"};
  InstanceGenerator gen(seed);
  const std::size_t budget = 500 * pairs;
  const auto top = static_cast<std::int64_t>(max_points);
  std::size_t isometric_pairs = 0;
  while (r.instances < pairs && r.attempts < budget) {
    ++r.attempts;
    const auto nx = static_cast<std::size_t>(gen.uniform(2, top));
    const FiniteMetricSpace x = gen.band_space(nx);
    // A quarter of the codomains are isometric copies, so surjections exist,
    // and a quarter are stretched copies, which satisfy the hypothesis.
    const auto pick = gen.uniform(0, 3);
    const bool copy = pick == 0;
    const FiniteMetricSpace y =
        copy        ? shuffled_copy(x, gen)
        : pick == 1 ? nudged_copy(x, 1, gen)
                    : gen.band_space(static_cast<std::size_t>(gen.uniform(2, static_cast<std::int64_t>(nx))));
    const SurjectionTheoremReport rep = verify_surjection_theorem(x, y);
    if (!rep.hypothesis_holds) continue;
    ++r.instances;
    if (copy) ++isometric_pairs;
    r.checks += rep.surjections_checked;
    if (rep.counterexample) {
      Json failure = pair_instance(x, y);
      failure["surjection"] = io::to_json(*rep.counterexample);
      fail(r, std::move(failure), "nonexpansive surjection that is not an isometry");
      return r;
    }
  }
  if (r.instances < pairs) {
    fail(r, nullptr, "only " + std::to_string(r.instances) + " qualifying pairs in " + std::to_string(budget) + " draws");
    return r;
  }
  r.detail = std::to_string(isometric_pairs) + " isometric pairs, " + std::to_string(r.checks) + " surjections";
  return r;
}

namespace {

template <typename Certify>
SuiteResult certificate_suite(std::string name, std::uint64_t seed, std::size_t spaces, std::size_t min_points,
                              std::size_t max_points, Certify certify) {
  SuiteResult r{std::move(name)};
  InstanceGenerator gen(seed);
  std::uint64_t triggered = 0;
  Rational smallest;
  const std::size_t budget = 50 * spaces;
  while (r.instances < spaces && r.attempts < budget) {
    ++r.attempts;
    const auto n = static_cast<std::size_t>(gen.uniform(static_cast<std::int64_t>(min_points), static_cast<std::int64_t>(max_points)));
    const FiniteMetricSpace x = gen.band_space(n);
    const Rational eps(gen.uniform(1, 4), 4);
    if (!(eps < x.diameter())) continue;
    if (n_sep_max(x, eps / Rational(9)).count < 4) continue;
    const CertifiedDelta cert = certify(x, eps);
    if (!cert.applicable) {
      Json failure{{"x", io::to_json(x)}, {"certificate", io::to_json(cert)}};
      fail(r, std::move(failure), "certificate not applicable: " + cert.reason);
      return r;
    }
    ++r.instances;
    const ConclusionCheck check = verify_certified_delta(x, x, cert);
    r.checks += check.maps_checked;
    triggered += check.maps_triggered;
    if (r.instances == 1 || cert.delta < smallest) smallest = cert.delta;
    if (cert.delta.sign() <= 0 || !check.holds) {
      Json failure{{"x", io::to_json(x)}, {"certificate", io::to_json(cert)}};
      if (check.counterexample) failure["map"] = io::to_json(*check.counterexample);
      fail(r, std::move(failure), "a map expanding by eps contracts every pair by less than delta");
      return r;
    }
  }
  if (r.instances < spaces) {
    fail(r, nullptr, "only " + std::to_string(r.instances) + " qualifying spaces in " + std::to_string(budget) + " draws");
    return r;
  }
  r.detail = std::to_string(triggered) + " expanding maps checked; smallest delta " + smallest.str();
  return r;
}

}  // namespace

SuiteResult suite_lemma_certificate(std::uint64_t seed, std::size_t spaces, std::size_t min_points,
                                    std::size_t max_points) {
  return certificate_suite("lemma certificate", seed, spaces, min_points, max_points,
                           [](const FiniteMetricSpace& x, const Rational& eps) { return certify_separated_delta(x, x, eps); });
}

SuiteResult suite_theorem_certificate(std::uint64_t seed, std::size_t spaces, std::size_t min_points,
                                      std::size_t max_points) {
  return certificate_suite("theorem certificate", seed, spaces, min_points, max_points,
                           [](const FiniteMetricSpace& x, const Rational& eps) { return certify_plasticity_delta(x, x, eps); });
}

}  // namespace plastic::cli
