#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "plastic/metric_space.hpp"
#include "plastic/point_map.hpp"
#include "plastic/rational.hpp"

namespace plastic {

enum class MapClass {
  kAllMaps,
  kBijections,
  kNoncontractiveMaps,
  kNoncontractiveBijections,
  kNonexpansiveSurjections,
};

[[nodiscard]] const char* to_string(MapClass c);
/// Accepts the enumerator names ("AllMaps", ...) and the CLI spellings
/// ("all", "bijections", ...). Returns nullopt otherwise.
[[nodiscard]] std::optional<MapClass> parse_map_class(std::string_view text);

enum class Verdict {
  kValue,       // some map in the class expands by more than eps; all of them contract
  kNotPlastic,  // some map expands by more than eps without contracting anything
  kVacuous,     // no map in the class expands by more than eps
};

[[nodiscard]] const char* to_string(Verdict v);

/// Exact modulus of plasticity at one eps. With V the maps of the class whose
/// expansion exceeds eps (strictly):
///   kVacuous    V is empty; the modulus is unbounded;
///   kNotPlastic min_{f in V} C(f) <= 0; the modulus is 0;
///   kValue      min_{f in V} C(f) = value > 0.
struct ModulusReport {
  Rational eps;
  MapClass map_class = MapClass::kBijections;
  Verdict verdict = Verdict::kVacuous;
  std::optional<Rational> value;            // the modulus; absent when vacuous
  std::optional<Rational> min_contraction;  // min C over V; absent when vacuous
  std::optional<PointMap> minimizing_map;   // lexicographically smallest table attaining it
  std::optional<IndexPair> expansion_witness;
  std::optional<IndexPair> contraction_witness;
  std::uint64_t maps_visited = 0;
  std::string note;
};

struct SearchOptions {
  /// Worker threads for map enumeration; the result does not depend on it.
  unsigned workers = 1;
};

/// Backtracking over map tables (domain points in index order, codomain
/// candidates ascending). Only class constraints and completed-contraction
/// dominance prune. Requires |X| >= 2, eps > 0 and a class of kBijections or
/// kAllMaps; throws std::invalid_argument otherwise.
[[nodiscard]] ModulusReport exact_modulus(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                          const Rational& eps, MapClass map_class,
                                          const SearchOptions& options = {});

/// Calls visit(table) for every map of the class in lexicographic table
/// order until it returns false. Returns the number of maps visited.
std::uint64_t for_each_map(const FiniteMetricSpace& x, const FiniteMetricSpace& y, MapClass map_class,
                           const std::function<bool(std::span<const Index>)>& visit);

/// Number of tables the class enumeration may have to consider: |Y|^|X| for
/// unrestricted classes, |Y|!/(|Y|-|X|)! for injective ones. Saturates at
/// UINT64_MAX.
[[nodiscard]] std::uint64_t enumeration_size(std::size_t nx, std::size_t ny, MapClass map_class);

struct PlasticityCheck {
  bool holds = true;
  std::optional<PointMap> counterexample;
  std::uint64_t maps_checked = 0;
  std::string note;
};

/// Every noncontractive bijection X -> Y is an isometry. Vacuously true when
/// |X| != |Y|.
[[nodiscard]] PlasticityCheck is_ec_plastic(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Every noncontractive map X -> Y is an isometric embedding. True outright
/// when |X| > |Y|.
[[nodiscard]] PlasticityCheck is_strongly_plastic(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// Least D >= 1 with f^D(x) = x and f^D(y) = y, i.e. the lcm of the cycle
/// lengths through x and y. f must be a bijection of a space onto itself
/// (std::invalid_argument otherwise); D <= M(|X|) is checked.
[[nodiscard]] std::int64_t orbit_period(const PointMap& f, Index x, Index y);

}  // namespace plastic
