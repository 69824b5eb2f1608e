#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plastic/hilbert.hpp"
#include "plastic/metric_space.hpp"
#include "plastic/point_map.hpp"
#include "plastic/rational.hpp"

namespace plastic {

/// Points on the real line with d(x, y) = |x - y|. Labels default to the
/// canonical coordinate strings.
[[nodiscard]] FiniteMetricSpace line_space(const std::vector<Rational>& coords,
                                           std::vector<std::string> labels = {});

/// n points, all pairwise distances equal to side.
[[nodiscard]] FiniteMetricSpace equilateral(std::size_t n, const Rational& side);

/// A space with a bijection f that expands one pair by exactly eps and
/// contracts nothing by more than eps / (M(N) - 1).
struct SharpExample {
  FiniteMetricSpace space;
  PointMap map;
  std::int64_t first_orbit = 0;   // i (or N for the cyclic family)
  std::int64_t second_orbit = 0;  // j (0 for the cyclic family)
  std::int64_t m = 0;             // M(N)
  /// Distances along the tracked orbit pairs, k = 0, 1, ...
  std::vector<Rational> orbit_distances;
  std::size_t padding = 0;
  std::string note;
};

/// Two orbits x1..xi and y1..yj with i*j = M(N) and i + j = N; the pair
/// (f^k x1, f^k y1) has distance a, a + eps, then drops by eps/(M(N) - 1) per
/// step; all other distances are a. With `pad`, fixpoints at distance 2a are
/// appended up to N points when the orbits have fewer (they never do for
/// admissible N, which the note records). Requires N >= 5, N != 6,
/// a >= eps > 0; throws std::invalid_argument otherwise and
/// std::logic_error if a construction-time property check fails.
[[nodiscard]] SharpExample sharp_case1(std::int64_t n, const Rational& eps, const Rational& a, bool pad = false);

/// Single N-cycle for N in {3, 4, 6}: consecutive pairs (g^k z1, g^{k+1} z1)
/// get a, a + eps, then decrease by eps/(N - 1); other distances are a.
[[nodiscard]] SharpExample sharp_cyclic(std::int64_t n, const Rational& eps, const Rational& a);

/// Disjoint union of m sharp pieces (eps = 1, a_n = 1 + 1/(10n)), each with an
/// extra point e_n at distance a_n + 1 from the rest of its piece, pieces at
/// mutual distance 3/2. maps[n-1] acts as the piece's sharp map on piece n and
/// as the identity elsewhere, so E = 1 and C <= delta_n = 1/n.
struct UnionTruncation {
  FiniteMetricSpace space;
  std::vector<PointMap> maps;
  std::vector<std::int64_t> piece_orders;  // N_n used for piece n
  std::vector<Rational> deltas;            // delta_n = 1/n
  std::vector<std::size_t> piece_offsets;  // first index of each piece
};

[[nodiscard]] UnionTruncation nonuniform_union_truncation(int m);

/// X = {0, step, ..., 1, 3}, Y = t*(grid of [0,1]) ∪ (grid of [0,1)) ∪ {4},
/// f_t(x) = t x on [0,1], f_t(3) = 4. Requires step = 1/K (K >= 2) and
/// 0 < t < 1.
struct IntervalGrid {
  FiniteMetricSpace x;
  FiniteMetricSpace y;
  PointMap f;
  Rational step;
  Rational t;
};

[[nodiscard]] IntervalGrid interval_pair_grid(const Rational& step, const Rational& t);

enum class RecipeKind {
  kSharpCase1,
  kSharpCyclic,
  kPaddedSharp,
  kNonuniformUnionTruncation,
  kIntervalPairGrid,
  kHilbertShiftSample,
};

[[nodiscard]] const char* to_string(RecipeKind kind);
[[nodiscard]] std::optional<RecipeKind> parse_recipe_kind(std::string_view text);

/// Parameters for one construction. Fields a kind does not use are ignored.
struct GeneratorRecipe {
  RecipeKind kind = RecipeKind::kSharpCase1;
  std::int64_t n = 5;     // sharp families
  Rational eps = 1;       // sharp families
  Rational a = 1;         // sharp families
  int m = 1;              // union truncation
  Rational step{1, 100};  // interval grid
  Rational t{1, 2};       // interval grid
  std::uint64_t seed = 0;  // Hilbert sample
  int samples = 20;        // Hilbert sample
  int precision = 30;      // Hilbert sample, decimal digits

  friend bool operator==(const GeneratorRecipe&, const GeneratorRecipe&) = default;
};

struct GeneratedArtifact {
  std::vector<std::pair<std::string, FiniteMetricSpace>> spaces;
  std::vector<std::pair<std::string, PointMap>> maps;
  std::optional<HilbertShiftReport> hilbert;
};

/// Replays a recipe; identical recipes give identical artifacts.
[[nodiscard]] GeneratedArtifact generate(const GeneratorRecipe& recipe);

}  // namespace plastic
