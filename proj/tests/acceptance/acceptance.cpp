// Prints one PASS/FAIL line per acceptance criterion. With --criterion k only
// that criterion runs. Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plastic/bounds.hpp"
#include "plastic/verify.hpp"
#include "plastic/constructions.hpp"
#include "plastic/random_spaces.hpp"
#include "plastic/search.hpp"
#include "plastic/separation.hpp"
#include "plastic_cli/suites.hpp"

using namespace plastic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_seconds;  // 0 when the criterion has no time bound
  std::function<Outcome()> run;
};

Outcome from_suite(const cli::SuiteResult& r) {
  std::ostringstream s;
  s << r.name << ": " << r.instances << " instances, " << r.checks << " checks";
  if (!r.detail.empty()) s << "; " << r.detail;
  if (!r.passed) s << "; failure " << r.failure.dump();
  return {r.passed, s.str()};
}

Outcome fail(const std::string& why) { return {false, why}; }

Outcome criterion_orbit_formula() {
  for (std::int64_t n = 2; n <= 300; ++n) {
    if (m_of_n(n) != m_bruteforce(n)) {
      return fail("N = " + std::to_string(n) + ": closed form " + std::to_string(m_of_n(n)) + ", search " +
                  std::to_string(m_bruteforce(n)));
    }
  }
  return {true, "closed form equals the lcm search for N = 2..300"};
}

Outcome sharp_bracket(std::int64_t n, const Rational& lo, const Rational& hi) {
  const auto start = std::chrono::steady_clock::now();
  const SharpExample ex = sharp_case1(n, 1, 1);
  const MapMargins own = margins(ex.map);
  if (own.contraction != hi) return fail("construction map has C = " + own.contraction.str());
  if (own.expansion != Rational(1)) return fail("construction map has E = " + own.expansion.str());
  const ModulusReport r = exact_modulus(ex.space, ex.space, Rational(99, 100), MapClass::kBijections);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.verdict != Verdict::kValue) return fail("N = " + std::to_string(n) + ": verdict " + to_string(r.verdict));
  if (*r.value < lo || *r.value > hi) {
    return fail("N = " + std::to_string(n) + ": value " + r.value->str() + " outside [" + lo.str() + ", " + hi.str() + "]");
  }
  const double limit = n == 5 ? 1.0 : 5.0;
  if (secs >= limit) return fail("N = " + std::to_string(n) + " took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << "N = " << n << ": value " << r.value->str() << " in [" << lo.str() << ", " << hi.str() << "], C(f) = "
    << own.contraction.str() << ", " << r.maps_visited << " of " << enumeration_size(ex.space.size(), ex.space.size(), MapClass::kBijections)
    << " bijections reached after pruning";
  return {true, s.str()};
}

Outcome criterion_sharpness() {
  const Outcome five = sharp_bracket(5, Rational(99, 500), Rational(1, 5));
  if (!five.pass) return five;
  const Outcome seven = sharp_bracket(7, Rational(99, 1100), Rational(1, 11));
  if (!seven.pass) return seven;
  return {true, five.detail + "; " + seven.detail};
}

bool naive_surjection_counterexample(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  bool found = false;
  oracle::each_map(x.size(), y.size(), [&](const std::vector<Index>& t) {
    std::vector<bool> hit(y.size());
    for (Index i : t) hit[i] = true;
    if (found || std::find(hit.begin(), hit.end(), false) != hit.end()) return;
    const oracle::Margins m = oracle::margins(x, y, t);
    if (m.e.sign() > 0) return;
    found = found || x.size() != y.size() || m.c.sign() > 0;
  });
  return found;
}

/// The suite, plus the same hypothesis re-checked against naive enumeration
/// of every map on a second seeded batch where half the codomains come from X.
template <typename Hypothesis, typename Violated>
Outcome suite_with_naive_check(const cli::SuiteResult& suite, std::uint64_t seed, int direction,
                               Hypothesis hypothesis, Violated violated) {
  Outcome o = from_suite(suite);
  if (!o.pass) return o;
  InstanceGenerator gen(seed);
  std::size_t qualifying = 0;
  std::uint64_t maps = 0;
  for (int k = 0; qualifying < 50 && k < 5000; ++k) {
    const auto nx = static_cast<std::size_t>(gen.uniform(2, 4));
    const FiniteMetricSpace x = gen.band_space(nx);
    FiniteMetricSpace y = gen.band_space(static_cast<std::size_t>(gen.uniform(2, 4)));
    if (gen.uniform(0, 1) == 0) {
      SpaceData d = x.data();
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = i + 1; j < nx; ++j) {
          const Rational moved = d.dist[i][j] + Rational(direction * gen.uniform(0, 3), 12);
          d.dist[i][j] = d.dist[j][i] = max(Rational(1), min(Rational(2), moved));
        }
      }
      y = FiniteMetricSpace::create(std::move(d));
    }
    if (!hypothesis(x, y)) continue;
    ++qualifying;
    maps += enumeration_size(x.size(), y.size(), MapClass::kAllMaps);
    if (violated(x, y)) return fail("naive enumeration found a counterexample at draw " + std::to_string(k));
  }
  if (qualifying < 50) return fail("only " + std::to_string(qualifying) + " qualifying pairs for the naive check");
  o.detail += "; naive check: " + std::to_string(qualifying) + " pairs, " + std::to_string(maps) + " maps";
  return o;
}

Outcome criterion_s_comparison() {
  return suite_with_naive_check(
      cli::suite_s_comparison(104, 50, 4), 204, -1,
      [](const FiniteMetricSpace& x, const FiniteMetricSpace& y) { return s_dominates(x, y); },
      [](const FiniteMetricSpace& x, const FiniteMetricSpace& y) { return oracle::has_expansion(x, y, false); });
}

Outcome criterion_surjections() {
  return suite_with_naive_check(
      cli::suite_surjection_rigidity(105, 50, 4), 205, 1,
      [](const FiniteMetricSpace& x, const FiniteMetricSpace& y) { return alpha_dominated(x, y); },
      naive_surjection_counterexample);
}

Outcome criterion_union_truncation() {
  std::ostringstream s;
  for (int m = 1; m <= 3; ++m) {
    const UnionTruncation u = nonuniform_union_truncation(m);
    const PointMap& g = u.maps.back();
    const MapMargins mm = margins(g);
    if (mm.expansion != Rational(1)) return fail("m = " + std::to_string(m) + ": E(g) = " + mm.expansion.str());
    if (mm.contraction > Rational(1, m)) return fail("m = " + std::to_string(m) + ": C(g) = " + mm.contraction.str());
    s << "m = " << m << ": |X| = " << u.space.size() << ", E = 1, C = " << mm.contraction.str();
    const std::uint64_t maps = enumeration_size(u.space.size(), u.space.size(), MapClass::kAllMaps);
    if (maps <= 10'000'000) {
      const ModulusReport r = exact_modulus(u.space, u.space, Rational(1, 2), MapClass::kAllMaps);
      if (r.verdict == Verdict::kVacuous || *r.value > Rational(1, m)) {
        return fail("m = " + std::to_string(m) + ": AllMaps modulus at 1/2 exceeds 1/m");
      }
      s << ", modulus(1/2) = " << r.value->str() << " over " << maps << " maps";
    } else {
      s << ", modulus not enumerated (" << u.space.size() << "^" << u.space.size() << " maps)";
    }
    if (m < 3) s << "; ";
  }
  return {true, s.str()};
}

Outcome criterion_interval_grid() {
  std::ostringstream s;
  bool pass = true;
  for (const Rational& t : {Rational(1, 2), Rational(3, 4), Rational(9, 10)}) {
    const IntervalGrid g = interval_pair_grid(Rational(1, 100), t);
    const MapMargins mm = margins(g.f);
    const bool e_ok = mm.expansion == Rational(1);
    const bool c_ok = mm.contraction == Rational(1) - t;
    pass = pass && e_ok && c_ok;
    s << "t = " << t.str() << ": E = " << mm.expansion.str() << " at (" << g.x.label(mm.expansion_pair.first) << ", "
      << g.x.label(mm.expansion_pair.second) << ")" << (e_ok ? "" : " (expected 1)") << ", C = " << mm.contraction.str()
      << (c_ok ? "" : " (expected 1 - t)") << "; ";
  }
  std::string detail = s.str();
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

Outcome criterion_hilbert() {
  GeneratorRecipe recipe;
  recipe.kind = RecipeKind::kHilbertShiftSample;
  recipe.seed = 2024;
  recipe.samples = 20;
  recipe.precision = 30;
  const GeneratedArtifact art = generate(recipe);
  const HilbertShiftReport& h = *art.hilbert;
  if (!h.witness.after.exact() || h.witness.after.lo != Rational(2) || h.witness.before != Rational(1)) {
    return fail("witness |f(0) - f(e1)|^2 enclosure [" + h.witness.after.lo.str() + ", " + h.witness.after.hi.str() + "]");
  }
  if (!h.all_noncontractive) return fail("some sample pair not certified noncontractive");
  return {true, "|f(0) - f(e1)|^2 = 2 exactly; " + std::to_string(h.pairs.size()) +
                    " pairs of 20 vectors certified noncontractive at 30 digits"};
}

Outcome criterion_oracles() {
  InstanceGenerator gen(12);
  std::size_t compared = 0;
  for (int k = 0; k < 20; ++k) {
    const FiniteMetricSpace x = gen.band_space(3);
    const FiniteMetricSpace y = gen.band_space(3);
    for (const Rational& eps : cli::modulus_eps_grid(x, y)) {
      for (MapClass c : {MapClass::kAllMaps, MapClass::kBijections}) {
        const oracle::Modulus o = oracle::modulus(x, y, eps, c == MapClass::kBijections);
        const ModulusReport r = exact_modulus(x, y, eps, c);
        ++compared;
        const bool same = o.vacuous ? r.verdict == Verdict::kVacuous
                                    : r.min_contraction && *r.min_contraction == o.min_c &&
                                          r.minimizing_map->table() == o.first_best;
        if (!same) return fail("modulus mismatch at pair " + std::to_string(k) + ", eps " + eps.str());
      }
    }
  }
  std::size_t samples = 0;
  for (int k = 0; k < 20; ++k) {
    const FiniteMetricSpace x = gen.band_space(10);
    for (const Rational& eps : profile_sample_points(x)) {
      const oracle::Separation o = oracle::separation(x, eps);
      ++samples;
      if (s_max(x, eps).value != o.s || alpha_min(x, eps).value != o.alpha || n_sep_max(x, eps).count != o.n_sep ||
          n_net_min(x, eps).count != o.n_net) {
        return fail("separation mismatch on space " + std::to_string(k) + " at eps " + eps.str());
      }
    }
  }
  return {true, std::to_string(compared) + " modulus values and " + std::to_string(samples) +
                    " separation samples equal naive enumeration"};
}

std::vector<Criterion> criteria() {
  return {
      {1, 1, criterion_orbit_formula},
      {2, 6, criterion_sharpness},
      {3, 30, [] { return from_suite(cli::suite_pair_sum_bound(101, 100, 4)); }},
      {4, 10, [] { return from_suite(cli::suite_nitka_bound(102, 50, 4)); }},
      {5, 60, [] { return from_suite(cli::suite_proper_measurements(103, 30, 4)); }},
      {6, 60, criterion_s_comparison},
      {7, 60, criterion_surjections},
      {8, 120, [] { return from_suite(cli::suite_lemma_certificate(106, 20, 4, 5)); }},
      {9, 0, criterion_union_truncation},
      {10, 0, criterion_interval_grid},
      {11, 1, criterion_hilbert},
      {12, 60, criterion_oracles},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: plastic_acceptance [--criterion k]\n";
      return 2;
    }
  }
  bool all = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    all = all && o.pass;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << o.detail << std::endl;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return all ? 0 : 1;
}
