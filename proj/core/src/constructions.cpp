#include "plastic/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "plastic/bounds.hpp"
#include "plastic/random_spaces.hpp"
#include "plastic/search.hpp"

namespace plastic {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction check failed: " + what);
}

SpaceData uniform_data(std::vector<std::string> labels, const Rational& a) {
  SpaceData data;
  const std::size_t n = labels.size();
  data.labels = std::move(labels);
  data.dist.assign(n, std::vector<Rational>(n, a));
  for (std::size_t i = 0; i < n; ++i) data.dist[i][i] = Rational{};
  return data;
}

void set_distance(SpaceData& data, Index i, Index j, const Rational& d) {
  data.dist[i][j] = d;
  data.dist[j][i] = d;
}

/// Cycle lengths (i, j), i < j, coprime with i + j = N and i j = M(N).
std::pair<std::int64_t, std::int64_t> orbit_lengths(std::int64_t n) {
  const std::int64_t m = m_of_n(n);
  for (std::int64_t i = 1; 2 * i < n; ++i) {
    const std::int64_t j = n - i;
    if (i * j == m && std::gcd(i, j) == 1) return {i, j};
  }
  throw std::logic_error("no coprime orbit split attains M(" + std::to_string(n) + ")");
}

/// a, a + eps, then down by eps/(steps - 1) each step.
std::vector<Rational> orbit_profile(std::int64_t steps, const Rational& eps, const Rational& a) {
  std::vector<Rational> out{a, a + eps};
  const Rational drop = eps / Rational(steps - 1);
  while (static_cast<std::int64_t>(out.size()) < steps) out.push_back(out.back() - drop);
  return out;
}

void check_sharp(const SharpExample& ex, const Rational& eps, std::int64_t steps) {
  const MapMargins mm = margins(ex.map);
  require(mm.expansion == eps, "E(f) = eps");
  require(mm.contraction == eps / Rational(steps - 1), "C(f) = eps / (M(N) - 1)");
  require(classify(ex.map).bijective, "f is a bijection");
}

}  // namespace

FiniteMetricSpace line_space(const std::vector<Rational>& coords, std::vector<std::string> labels) {
  const std::size_t n = coords.size();
  if (labels.empty()) {
    for (const auto& c : coords) labels.push_back(c.str());
  }
  if (labels.size() != n) throw std::invalid_argument("line_space: label count does not match coordinates");
  SpaceData data;
  data.labels = std::move(labels);
  data.dist.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data.dist[i][j] = abs(coords[i] - coords[j]);
  }
  return FiniteMetricSpace::create(std::move(data));
}

FiniteMetricSpace equilateral(std::size_t n, const Rational& side) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FiniteMetricSpace::create(uniform_data(std::move(labels), side));
}

SharpExample sharp_case1(std::int64_t n, const Rational& eps, const Rational& a, bool pad) {
  if (n < 5 || n == 6) {
    throw std::invalid_argument("two-orbit construction needs N >= 5 and N != 6, got " + std::to_string(n));
  }
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (a < eps) throw std::invalid_argument("base distance a must be at least eps");

  const auto [i, j] = orbit_lengths(n);
  const std::int64_t m = i * j;

  std::vector<std::string> labels;
  for (std::int64_t p = 1; p <= i; ++p) labels.push_back("x" + std::to_string(p));
  for (std::int64_t q = 1; q <= j; ++q) labels.push_back("y" + std::to_string(q));
  const auto padding = static_cast<std::size_t>(std::max<std::int64_t>(0, n - i - j));
  if (pad) {
    for (std::size_t p = 1; p <= padding; ++p) labels.push_back("z" + std::to_string(p));
  }
  const std::size_t size = labels.size();
  SpaceData data = uniform_data(std::move(labels), a);
  for (std::size_t p = static_cast<std::size_t>(i + j); p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      if (q != p) set_distance(data, p, q, 2 * a);
    }
  }

  std::vector<Rational> orbit = orbit_profile(m, eps, a);
  for (std::int64_t k = 0; k < m; ++k) {
    set_distance(data, static_cast<Index>(k % i), static_cast<Index>(i + k % j), orbit[k]);
  }
  const FiniteMetricSpace space = FiniteMetricSpace::create(std::move(data));

  std::vector<Index> table(size);
  for (std::int64_t p = 0; p < i; ++p) table[p] = static_cast<Index>((p + 1) % i);
  for (std::int64_t q = 0; q < j; ++q) table[i + q] = static_cast<Index>(i + (q + 1) % j);
  for (std::size_t p = static_cast<std::size_t>(i + j); p < size; ++p) table[p] = p;

  std::string note = padding == 0 ? "orbit lengths " + std::to_string(i) + " + " + std::to_string(j) +
                                        " already use all N points; no padding needed"
                                  : std::to_string(padding) + " fixpoints appended";
  SharpExample ex{space, PointMap(space, space, std::move(table)), i, j, m, std::move(orbit),
                  pad ? padding : 0, std::move(note)};
  check_sharp(ex, eps, m);
  require(orbit_period(ex.map, 0, static_cast<Index>(i)) == m, "orbit period of (x1, y1) = M(N)");
  for (const auto& od : ex.orbit_distances) require(od >= a && od <= a + eps, "orbit distances in [a, a + eps]");
  return ex;
}

SharpExample sharp_cyclic(std::int64_t n, const Rational& eps, const Rational& a) {
  if (n != 3 && n != 4 && n != 6) throw std::invalid_argument("cyclic construction needs N in {3, 4, 6}");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (a < eps) throw std::invalid_argument("base distance a must be at least eps");

  std::vector<std::string> labels;
  for (std::int64_t p = 1; p <= n; ++p) labels.push_back("z" + std::to_string(p));
  SpaceData data = uniform_data(std::move(labels), a);

  std::vector<Rational> orbit = orbit_profile(n, eps, a);
  for (std::int64_t k = 0; k < n; ++k) {
    set_distance(data, static_cast<Index>(k), static_cast<Index>((k + 1) % n), orbit[k]);
  }
  const FiniteMetricSpace space = FiniteMetricSpace::create(std::move(data));
  std::vector<Index> table(static_cast<std::size_t>(n));
  for (std::int64_t p = 0; p < n; ++p) table[p] = static_cast<Index>((p + 1) % n);
  SharpExample ex{space, PointMap(space, space, std::move(table)), n, 0, m_of_n(n), std::move(orbit), 0,
                  "single " + std::to_string(n) + "-cycle"};
  check_sharp(ex, eps, n);
  require(ex.m == n, "M(N) = N");
  return ex;
}

UnionTruncation nonuniform_union_truncation(int m) {
  if (m < 1) throw std::invalid_argument("union truncation needs m >= 1");
  std::vector<Rational> deltas;
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> offsets;
  std::vector<SharpExample> pieces;
  std::vector<Rational> extra;  // distance from e_n to its piece
  for (int p = 1; p <= m; ++p) {
    const Rational delta(1, p);
    const Rational a = Rational(1) + Rational(1, 10 * static_cast<std::int64_t>(p));
    std::int64_t order = 5;
    while (order == 6 || Rational(1, m_of_n(order) - 1) > delta) ++order;
    pieces.push_back(sharp_case1(order, Rational(1), a));
    extra.push_back(a + 1);
    deltas.push_back(delta);
    orders.push_back(order);
  }

  std::vector<std::string> labels;
  for (int p = 0; p < m; ++p) {
    offsets.push_back(labels.size());
    const std::string prefix = "p" + std::to_string(p + 1) + ".";
    for (const auto& l : pieces[p].space.labels()) labels.push_back(prefix + l);
    labels.push_back(prefix + "e");
  }
  const std::size_t size = labels.size();
  SpaceData data = uniform_data(std::move(labels), Rational(3, 2));
  for (int p = 0; p < m; ++p) {
    const std::size_t off = offsets[p];
    const auto& piece = pieces[p].space;
    const std::size_t k = piece.size();
    for (Index u = 0; u < k; ++u) {
      for (Index v = u + 1; v < k; ++v) set_distance(data, off + u, off + v, piece.d(u, v));
      set_distance(data, off + u, off + k, extra[p]);
    }
  }
  UnionTruncation out{FiniteMetricSpace::create(std::move(data)), {}, std::move(orders), std::move(deltas),
                      std::move(offsets)};

  for (int p = 0; p < m; ++p) {
    std::vector<Index> table(size);
    std::iota(table.begin(), table.end(), Index{0});
    const std::size_t off = out.piece_offsets[p];
    for (Index u = 0; u < pieces[p].space.size(); ++u) table[off + u] = off + pieces[p].map(u);
    out.maps.emplace_back(out.space, out.space, std::move(table));
    const MapMargins mm = margins(out.maps.back());
    require(mm.expansion == Rational(1), "E(g_n) = 1");
    require(mm.contraction <= out.deltas[p], "C(g_n) <= delta_n");
  }
  return out;
}

IntervalGrid interval_pair_grid(const Rational& step, const Rational& t) {
  if (step.numerator() != 1 || step.denominator() < 2) {
    throw std::invalid_argument("grid step must be 1/K with K >= 2, got " + step.str());
  }
  if (t.sign() <= 0 || t >= Rational(1)) throw std::invalid_argument("t must lie in (0, 1), got " + t.str());
  const long k_max = step.denominator().get_si();

  std::vector<Rational> xs;
  for (long k = 0; k <= k_max; ++k) xs.push_back(Rational(k) * step);
  xs.push_back(Rational(3));

  std::vector<Rational> ys;
  for (long k = 0; k <= k_max; ++k) ys.push_back(t * Rational(k) * step);
  for (long k = 0; k < k_max; ++k) ys.push_back(Rational(k) * step);
  ys.push_back(Rational(4));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const FiniteMetricSpace x = line_space(xs);
  const FiniteMetricSpace y = line_space(ys);
  std::vector<Index> table;
  for (std::size_t p = 0; p + 1 < xs.size(); ++p) {
    const auto it = std::lower_bound(ys.begin(), ys.end(), t * xs[p]);
    table.push_back(static_cast<Index>(it - ys.begin()));
  }
  table.push_back(ys.size() - 1);
  IntervalGrid out{x, y, PointMap(x, y, std::move(table)), step, t};

  const Index zero = 0;
  const Index one = xs.size() - 2;
  const Index three = xs.size() - 1;
  const auto grow = [&](Index a, Index b) { return out.y.d(out.f(a), out.f(b)) - out.x.d(a, b); };
  require(grow(zero, three) == Rational(1), "d(f(0), f(3)) - d(0, 3) = 1");
  const MapMargins mm = margins(out.f);
  require(mm.contraction == Rational(1) - t, "C(f_t) = 1 - t");
  require(mm.contraction_pair == IndexPair{zero, one}, "contraction attained at (0, 1)");
  return out;
}

const char* to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::kSharpCase1: return "SharpCase1";
    case RecipeKind::kSharpCyclic: return "SharpCyclic";
    case RecipeKind::kPaddedSharp: return "PaddedSharp";
    case RecipeKind::kNonuniformUnionTruncation: return "NonuniformUnionTruncation";
    case RecipeKind::kIntervalPairGrid: return "IntervalPairGrid";
    case RecipeKind::kHilbertShiftSample: return "HilbertShiftSample";
  }
  return "unknown";
}

std::optional<RecipeKind> parse_recipe_kind(std::string_view text) {
  for (RecipeKind k : {RecipeKind::kSharpCase1, RecipeKind::kSharpCyclic, RecipeKind::kPaddedSharp,
                       RecipeKind::kNonuniformUnionTruncation, RecipeKind::kIntervalPairGrid,
                       RecipeKind::kHilbertShiftSample}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

GeneratedArtifact generate(const GeneratorRecipe& recipe) {
  GeneratedArtifact out;
  switch (recipe.kind) {
    case RecipeKind::kSharpCase1:
    case RecipeKind::kPaddedSharp: {
      SharpExample ex = sharp_case1(recipe.n, recipe.eps, recipe.a, recipe.kind == RecipeKind::kPaddedSharp);
      out.spaces.emplace_back("space", ex.space);
      out.maps.emplace_back("f", ex.map);
      break;
    }
    case RecipeKind::kSharpCyclic: {
      SharpExample ex = sharp_cyclic(recipe.n, recipe.eps, recipe.a);
      out.spaces.emplace_back("space", ex.space);
      out.maps.emplace_back("f", ex.map);
      break;
    }
    case RecipeKind::kNonuniformUnionTruncation: {
      UnionTruncation u = nonuniform_union_truncation(recipe.m);
      out.spaces.emplace_back("space", u.space);
      for (std::size_t p = 0; p < u.maps.size(); ++p) out.maps.emplace_back("g" + std::to_string(p + 1), u.maps[p]);
      break;
    }
    case RecipeKind::kIntervalPairGrid: {
      IntervalGrid g = interval_pair_grid(recipe.step, recipe.t);
      out.spaces.emplace_back("x", g.x);
      out.spaces.emplace_back("y", g.y);
      out.maps.emplace_back("f", g.f);
      break;
    }
    case RecipeKind::kHilbertShiftSample: {
      if (recipe.samples < 0) throw std::invalid_argument("sample count must be nonnegative");
      InstanceGenerator gen(recipe.seed);
      std::vector<BallVector> sample;
      for (int s = 0; s < recipe.samples; ++s) sample.push_back(gen.ball_vector(4));
      out.hilbert = hilbert_shift_demo(sample, recipe.precision);
      break;
    }
  }
  return out;
}

}  // namespace plastic
