#include "plastic/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "margin_table.hpp"
#include "plastic/bounds.hpp"

namespace plastic {

namespace {

using detail::MarginTable;
using detail::RankExtremes;
using Rank = MarginTable::Rank;

struct ClassRules {
  bool injective = false;
  bool surjective = false;
  bool noncontractive = false;
  bool nonexpansive = false;
};

ClassRules rules_for(MapClass c) {
  switch (c) {
    case MapClass::kAllMaps: return {};
    case MapClass::kBijections: return {true, true, false, false};
    case MapClass::kNoncontractiveMaps: return {false, false, true, false};
    case MapClass::kNoncontractiveBijections: return {true, true, true, false};
    case MapClass::kNonexpansiveSurjections: return {false, true, false, true};
  }
  return {};
}

/// Depth-first walk over the tables of one map class in lexicographic order.
/// visit(table, extremes) returns false to stop.
template <typename Visit>
class ClassWalker {
 public:
  ClassWalker(const MarginTable& t, ClassRules rules, Visit& visit)
      : t_(t), rules_(rules), visit_(visit), table_(t.nx()), used_(t.ny(), 0),
        nonneg_(t.at_least(Rational{})), positive_(t.greater_than(Rational{})) {}

  std::uint64_t run() {
    if (rules_.injective && t_.nx() > t_.ny()) return 0;
    if (rules_.surjective && t_.nx() < t_.ny()) return 0;
    if (rules_.injective && rules_.surjective && t_.nx() != t_.ny()) return 0;
    walk(0, RankExtremes{}, t_.ny());
    return visited_;
  }

 private:
  bool walk(Index k, RankExtremes e, std::size_t uncovered) {
    if (k == t_.nx()) {
      ++visited_;
      return visit_(std::span<const Index>(table_), e);
    }
    const std::size_t remaining_after = t_.nx() - k - 1;
    for (Index c = 0; c < t_.ny(); ++c) {
      if (rules_.injective && used_[c]) continue;
      const std::size_t still = uncovered - (used_[c] ? 0 : 1);
      if (rules_.surjective && still > remaining_after) continue;
      const RankExtremes next = detail::extend(t_, table_, k, c, e);
      if (rules_.noncontractive && next.min < nonneg_) continue;
      if (rules_.nonexpansive && next.max >= positive_) continue;
      table_[k] = c;
      ++used_[c];
      const bool go_on = walk(k + 1, next, still);
      --used_[c];
      if (!go_on) return false;
    }
    return true;
  }

  const MarginTable& t_;
  ClassRules rules_;
  Visit& visit_;
  std::vector<Index> table_;
  std::vector<int> used_;
  Rank nonneg_;
  Rank positive_;
  std::uint64_t visited_ = 0;
};

template <typename Visit>
std::uint64_t walk_class(const MarginTable& t, MapClass c, Visit visit) {
  return ClassWalker<Visit>(t, rules_for(c), visit).run();
}

/// Best violating map within the subtree whose first entry is `first`.
struct SubtreeBest {
  bool found = false;
  Rank min = 0;  // rank of min D, i.e. -C
  std::vector<Index> table;
  std::uint64_t leaves = 0;
};

class ModulusWalker {
 public:
  ModulusWalker(const MarginTable& t, bool injective, Rank violation, std::atomic<Rank>& shared)
      : t_(t), injective_(injective), violation_(violation), shared_(shared), table_(t.nx()),
        used_(t.ny(), false) {}

  SubtreeBest run(Index first) {
    best_ = SubtreeBest{};
    table_[0] = first;
    used_[first] = true;
    walk(1, RankExtremes{});
    used_[first] = false;
    return best_;
  }

 private:
  bool dominated(Rank partial_min) const {
    if (partial_min < shared_.load(std::memory_order_relaxed)) return true;
    if (!best_.found) return false;
    return partial_min < best_.min || partial_min == best_.min;
  }

  void walk(Index k, RankExtremes e) {
    if (k == t_.nx()) {
      ++best_.leaves;
      if (e.max < violation_) return;
      if (!best_.found || e.min > best_.min) {
        best_.found = true;
        best_.min = e.min;
        best_.table = table_;
        Rank seen = shared_.load(std::memory_order_relaxed);
        while (seen < e.min && !shared_.compare_exchange_weak(seen, e.min, std::memory_order_relaxed)) {
        }
      }
      return;
    }
    for (Index c = 0; c < t_.ny(); ++c) {
      if (injective_ && used_[c]) continue;
      const RankExtremes next = detail::extend(t_, table_, k, c, e);
      if (dominated(next.min)) continue;
      table_[k] = c;
      used_[c] = true;
      walk(k + 1, next);
      used_[c] = false;
    }
  }

  const MarginTable& t_;
  bool injective_;
  Rank violation_;
  std::atomic<Rank>& shared_;
  std::vector<Index> table_;
  std::vector<bool> used_;
  SubtreeBest best_;
};

}  // namespace

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::kAllMaps: return "AllMaps";
    case MapClass::kBijections: return "Bijections";
    case MapClass::kNoncontractiveMaps: return "NoncontractiveMaps";
    case MapClass::kNoncontractiveBijections: return "NoncontractiveBijections";
    case MapClass::kNonexpansiveSurjections: return "NonexpansiveSurjections";
  }
  return "unknown";
}

std::optional<MapClass> parse_map_class(std::string_view text) {
  for (MapClass c : {MapClass::kAllMaps, MapClass::kBijections, MapClass::kNoncontractiveMaps,
                     MapClass::kNoncontractiveBijections, MapClass::kNonexpansiveSurjections}) {
    if (text == to_string(c)) return c;
  }
  if (text == "all" || text == "maps" || text == "all-maps") return MapClass::kAllMaps;
  if (text == "bijections" || text == "bij") return MapClass::kBijections;
  if (text == "noncontractive") return MapClass::kNoncontractiveMaps;
  if (text == "noncontractive-bijections") return MapClass::kNoncontractiveBijections;
  if (text == "nonexpansive-surjections") return MapClass::kNonexpansiveSurjections;
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kValue: return "Value";
    case Verdict::kNotPlastic: return "NotPlastic";
    case Verdict::kVacuous: return "Vacuous";
  }
  return "unknown";
}

std::uint64_t enumeration_size(std::size_t nx, std::size_t ny, MapClass map_class) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const ClassRules rules = rules_for(map_class);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < nx; ++k) {
    const std::uint64_t choices = rules.injective ? (ny > k ? ny - k : 0) : ny;
    if (choices == 0) return 0;
    if (total > kMax / choices) return kMax;
    total *= choices;
  }
  return total;
}

ModulusReport exact_modulus(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Rational& eps,
                            MapClass map_class, const SearchOptions& options) {
  if (x.size() < 2) throw std::invalid_argument("modulus needs a domain with at least two points");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
  if (map_class != MapClass::kBijections && map_class != MapClass::kAllMaps) {
    throw std::invalid_argument(std::string("modulus is defined for Bijections or AllMaps, not ") +
                                to_string(map_class));
  }
  ModulusReport report;
  report.eps = eps;
  report.map_class = map_class;
  const bool injective = map_class == MapClass::kBijections;
  if (injective && x.size() != y.size()) {
    report.note = "no bijections between spaces of different sizes";
    return report;
  }

  const MarginTable table(x, y);
  const Rank violation = table.greater_than(eps);
  std::atomic<Rank> shared{std::numeric_limits<Rank>::min()};

  std::vector<SubtreeBest> results(y.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(y.size())));
  if (workers == 1) {
    ModulusWalker walker(table, injective, violation, shared);
    for (Index first = 0; first < y.size(); ++first) results[first] = walker.run(first);
  } else {
    std::atomic<Index> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        ModulusWalker walker(table, injective, violation, shared);
        for (Index first = next++; first < y.size(); first = next++) results[first] = walker.run(first);
      });
    }
    for (auto& th : pool) th.join();
  }

  const SubtreeBest* best = nullptr;
  for (const auto& r : results) {
    report.maps_visited += r.leaves;
    if (r.found && (!best || r.min > best->min)) best = &r;
  }
  if (!best) {
    report.note = "no map in the class expands a pair by more than eps";
    return report;
  }

  PointMap f(x, y, best->table);
  const MapMargins mm = margins(f);
  report.min_contraction = -table.value(best->min);
  report.verdict = report.min_contraction->sign() > 0 ? Verdict::kValue : Verdict::kNotPlastic;
  report.value = report.verdict == Verdict::kValue ? *report.min_contraction : Rational{};
  report.expansion_witness = mm.expansion_pair;
  report.contraction_witness = mm.contraction_pair;
  report.minimizing_map = std::move(f);
  return report;
}

std::uint64_t for_each_map(const FiniteMetricSpace& x, const FiniteMetricSpace& y, MapClass map_class,
                           const std::function<bool(std::span<const Index>)>& visit) {
  const MarginTable table(x, y);
  return walk_class(table, map_class, [&](std::span<const Index> t, const RankExtremes&) { return visit(t); });
}

namespace {

/// First map of the (noncontractive) class that strictly expands some pair.
PlasticityCheck find_expanding(const FiniteMetricSpace& x, const FiniteMetricSpace& y, MapClass c) {
  const MarginTable table(x, y);
  const Rank positive = table.greater_than(Rational{});
  PlasticityCheck out;
  std::optional<std::vector<Index>> witness;
  out.maps_checked = walk_class(table, c, [&](std::span<const Index> t, const RankExtremes& e) {
    if (e.max >= positive) {
      witness.emplace(t.begin(), t.end());
      return false;
    }
    return true;
  });
  if (witness) {
    out.holds = false;
    out.counterexample = PointMap(x, y, *witness);
  }
  return out;
}

}  // namespace

PlasticityCheck is_ec_plastic(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.size() != y.size()) {
    PlasticityCheck out;
    out.note = "no bijections";
    return out;
  }
  return find_expanding(x, y, MapClass::kNoncontractiveBijections);
}

PlasticityCheck is_strongly_plastic(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.size() > y.size()) {
    PlasticityCheck out;
    out.note = "|X| > |Y|: every map glues a pair";
    return out;
  }
  return find_expanding(x, y, MapClass::kNoncontractiveMaps);
}

std::int64_t orbit_period(const PointMap& f, Index x, Index y) {
  const std::size_t n = f.domain().size();
  if (!(f.domain() == f.codomain()) || !classify(f).bijective) {
    throw std::invalid_argument("orbit period needs a bijection of a space onto itself");
  }
  if (x >= n || y >= n) throw std::invalid_argument("orbit period: point index out of range");
  const auto cycle_length = [&](Index p) {
    std::int64_t len = 1;
    for (Index q = f(p); q != p; q = f(q)) ++len;
    return len;
  };
  const std::int64_t period = std::lcm(cycle_length(x), cycle_length(y));
  if (n >= 2 && period > m_of_n(static_cast<std::int64_t>(n))) {
    throw std::logic_error("orbit period exceeds M(N)");
  }
  return period;
}

}  // namespace plastic
