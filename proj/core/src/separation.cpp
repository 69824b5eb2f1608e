#include "plastic/separation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "scaled_weights.hpp"

namespace plastic {

namespace {

using Mask = std::uint64_t;

void require_positive(const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive, got " + eps.str());
}

void require_searchable(const FiniteMetricSpace& space) {
  if (space.size() > kMaxSearchPoints) {
    throw std::length_error("subset search supports at most " + std::to_string(kMaxSearchPoints) +
                            " points, space has " + std::to_string(space.size()));
  }
}

Mask bit(Index i) { return Mask{1} << i; }

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

/// Bits strictly above position i.
Mask above(Index i) { return i >= 63 ? Mask{0} : ~(bit(i + 1) - 1); }

IndexSet to_indices(Mask m) {
  IndexSet out;
  while (m) {
    out.push_back(static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

/// adj[i]: points j != i with d(i, j) >= eps.
std::vector<Mask> separation_graph(const FiniteMetricSpace& space, const Rational& eps) {
  const std::size_t n = space.size();
  std::vector<Mask> adj(n, 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (space.d(i, j) >= eps) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  return adj;
}

/// cover[i]: points j with d(i, j) < eps, always including i.
std::vector<Mask> cover_sets(const FiniteMetricSpace& space, const Rational& eps) {
  const std::size_t n = space.size();
  std::vector<Mask> cover(n, 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (space.d(i, j) < eps) cover[i] |= bit(j);
    }
  }
  return cover;
}

/// Greedy colouring of the candidate set, highest degree first; the number of
/// colours bounds the largest clique inside it.
int colour_bound(Mask cand, const std::vector<Mask>& adj) {
  std::vector<Index> order = to_indices(cand);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::popcount(adj[a] & cand) > std::popcount(adj[b] & cand);
  });
  std::vector<Mask> classes;
  for (Index v : order) {
    bool placed = false;
    for (auto& cls : classes) {
      if ((cls & adj[v]) == 0) {
        cls |= bit(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(bit(v));
  }
  return static_cast<int>(classes.size());
}

// Each search walks subsets in lexicographic order of their sorted index
// sequences and only replaces the incumbent on strict improvement (or when no
// witness has been recorded yet), so the witness is the lexicographically
// smallest optimum. Pruning is strict for the same reason.

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  SubsetCount run(std::size_t n) {
    // Greedy incumbent size: take points in index order when compatible.
    Mask greedy = 0;
    for (Index v = 0; v < n; ++v) {
      if ((adj_[v] & greedy) == greedy) greedy |= bit(v);
    }
    best_size_ = std::popcount(greedy);
    expand(0, 0, full_mask(n));
    return {static_cast<std::size_t>(best_size_), to_indices(best_)};
  }

 private:
  void expand(Mask cur, int size, Mask cand) {
    if (cur != 0 && (size > best_size_ || (size == best_size_ && !have_))) {
      best_size_ = size;
      best_ = cur;
      have_ = true;
    }
    if (cand == 0) return;
    const int bound = size + colour_bound(cand, adj_);
    if (bound < best_size_ || (bound == best_size_ && have_)) return;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const Index v = static_cast<Index>(std::countr_zero(rest));
      expand(cur | bit(v), size + 1, cand & adj_[v] & above(v));
    }
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
  int best_size_ = 0;
  bool have_ = false;
};

template <typename W>
class MaxSigmaSearch {
 public:
  MaxSigmaSearch(const detail::Weights<W>& w, std::vector<Mask> adj) : w_(w), adj_(std::move(adj)) {}

  SubsetValue run() {
    const std::size_t n = w_.n;
    Mask greedy = 0;
    for (Index v = 0; v < n; ++v) {
      if ((adj_[v] & greedy) == greedy) greedy |= bit(v);
    }
    best_value_ = sigma_of(greedy);
    expand(0, W{}, full_mask(n));
    return {w_.to_rational(best_value_), to_indices(best_)};
  }

 private:
  W sigma_of(Mask m) const {
    W total{};
    for (Mask a = m; a; a &= a - 1) {
      const Index i = static_cast<Index>(std::countr_zero(a));
      for (Mask b = m & above(i); b; b &= b - 1) total += w_(i, static_cast<Index>(std::countr_zero(b)));
    }
    return total;
  }

  /// sigma(cur ∪ cand): every separated extension lies inside it and sigma
  /// only grows with the set.
  W bound(Mask cur, const W& value, Mask cand) const {
    W total = value;
    for (Mask c = cand; c; c &= c - 1) {
      const Index v = static_cast<Index>(std::countr_zero(c));
      for (Mask u = cur; u; u &= u - 1) total += w_(static_cast<Index>(std::countr_zero(u)), v);
    }
    total += sigma_of(cand);
    return total;
  }

  void expand(Mask cur, const W& value, Mask cand) {
    if (cur != 0 && (value > best_value_ || (value == best_value_ && !have_))) {
      best_value_ = value;
      best_ = cur;
      have_ = true;
    }
    if (cand == 0) return;
    const W b = bound(cur, value, cand);
    if (b < best_value_ || (b == best_value_ && have_)) return;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const Index v = static_cast<Index>(std::countr_zero(rest));
      W next = value;
      for (Mask u = cur; u; u &= u - 1) next += w_(static_cast<Index>(std::countr_zero(u)), v);
      expand(cur | bit(v), next, cand & adj_[v] & above(v));
    }
  }

  const detail::Weights<W>& w_;
  std::vector<Mask> adj_;
  Mask best_ = 0;
  W best_value_{};
  bool have_ = false;
};

/// Include/exclude walk over points in index order (include first), which
/// visits equal-size or non-nested covers in lexicographic order.
template <typename W, bool kMinimiseSigma>
class CoverSearch {
 public:
  CoverSearch(const detail::Weights<W>* w, std::vector<Mask> cover, std::size_t n)
      : w_(w), cover_(std::move(cover)), n_(n), full_(full_mask(n)), suffix_union_(n + 1, 0),
        suffix_max_(n + 1, 0) {
    for (Index i = n; i-- > 0;) {
      suffix_union_[i] = suffix_union_[i + 1] | cover_[i];
      suffix_max_[i] = std::max(suffix_max_[i + 1], std::popcount(cover_[i]));
    }
  }

  void run() {
    // Greedy incumbent: repeatedly take the point covering most uncovered.
    Mask chosen = 0;
    Mask covered = 0;
    while (covered != full_) {
      Index pick = 0;
      int gain = -1;
      for (Index v = 0; v < n_; ++v) {
        const int g = std::popcount(cover_[v] & ~covered);
        if (g > gain) {
          gain = g;
          pick = v;
        }
      }
      chosen |= bit(pick);
      covered |= cover_[pick];
    }
    best_count_ = std::popcount(chosen);
    if constexpr (kMinimiseSigma) best_value_ = sigma_of(chosen);
    walk(0, 0, 0, W{}, 0);
  }

  [[nodiscard]] Mask best() const { return best_; }
  [[nodiscard]] int best_count() const { return best_count_; }
  [[nodiscard]] const W& best_value() const { return best_value_; }

 private:
  W sigma_of(Mask m) const {
    W total{};
    for (Mask a = m; a; a &= a - 1) {
      const Index i = static_cast<Index>(std::countr_zero(a));
      for (Mask b = m & above(i); b; b &= b - 1) total += (*w_)(i, static_cast<Index>(std::countr_zero(b)));
    }
    return total;
  }

  W added_sigma(Mask cur, Index v) const {
    W total{};
    for (Mask u = cur; u; u &= u - 1) total += (*w_)(static_cast<Index>(std::countr_zero(u)), v);
    return total;
  }

  void record(Mask chosen, int count, const W& value) {
    if constexpr (kMinimiseSigma) {
      if (value < best_value_ || (value == best_value_ && !have_)) {
        best_value_ = value;
        best_count_ = count;
        best_ = chosen;
        have_ = true;
      }
    } else {
      if (count < best_count_ || (count == best_count_ && !have_)) {
        best_count_ = count;
        best_ = chosen;
        have_ = true;
      }
    }
  }

  bool prune(Mask chosen, int count, const W& value, Mask covered, Index i) const {
    const Mask uncovered = full_ & ~covered;
    if ((suffix_union_[i] & uncovered) != uncovered) return true;
    if constexpr (kMinimiseSigma) {
      // The lowest uncovered point still needs a coverer at index >= i.
      const Index need = static_cast<Index>(std::countr_zero(uncovered));
      bool found = false;
      W cheapest{};
      for (Index k = i; k < n_; ++k) {
        if (cover_[k] & bit(need)) {
          W add = added_sigma(chosen, k);
          if (!found || add < cheapest) cheapest = add;
          found = true;
        }
      }
      const W lb = value + cheapest;
      return lb > best_value_ || (lb == best_value_ && have_);
    } else {
      (void)chosen;
      (void)value;
      const int per = std::max(1, suffix_max_[i]);
      const int lb = count + (std::popcount(uncovered) + per - 1) / per;
      return lb > best_count_ || (lb == best_count_ && have_);
    }
  }

  void walk(Index i, Mask chosen, int count, const W& value, Mask covered) {
    if (covered == full_) {
      record(chosen, count, value);
      return;
    }
    if (i == n_ || prune(chosen, count, value, covered, i)) return;
    if (cover_[i] & ~covered) {
      W next = value;
      if constexpr (kMinimiseSigma) next += added_sigma(chosen, i);
      walk(i + 1, chosen | bit(i), count + 1, next, covered | cover_[i]);
    }
    walk(i + 1, chosen, count, value, covered);
  }

  const detail::Weights<W>* w_;
  std::vector<Mask> cover_;
  std::size_t n_;
  Mask full_;
  std::vector<Mask> suffix_union_;
  std::vector<int> suffix_max_;
  Mask best_ = 0;
  int best_count_ = 0;
  W best_value_{};
  bool have_ = false;
};

}  // namespace

bool is_eps_net(const FiniteMetricSpace& space, std::span<const Index> subset, const Rational& eps) {
  require_positive(eps);
  check_subset(space, subset, /*allow_empty=*/true);
  for (Index x = 0; x < space.size(); ++x) {
    const bool covered = std::any_of(subset.begin(), subset.end(), [&](Index a) { return space.d(x, a) < eps; });
    if (!covered) return false;
  }
  return true;
}

bool is_eps_separated(const FiniteMetricSpace& space, std::span<const Index> subset, const Rational& eps) {
  require_positive(eps);
  check_subset(space, subset);
  for (std::size_t p = 0; p < subset.size(); ++p) {
    for (std::size_t q = p + 1; q < subset.size(); ++q) {
      if (space.d(subset[p], subset[q]) < eps) return false;
    }
  }
  return true;
}

bool is_maximal_separated(const FiniteMetricSpace& space, std::span<const Index> subset, const Rational& eps) {
  if (!is_eps_separated(space, subset, eps)) {
    throw std::invalid_argument("subset is not eps-separated at eps = " + eps.str());
  }
  std::vector<bool> member(space.size(), false);
  for (Index a : subset) member[a] = true;
  for (Index x = 0; x < space.size(); ++x) {
    if (member[x]) continue;
    const bool addable = std::all_of(subset.begin(), subset.end(), [&](Index a) { return space.d(x, a) >= eps; });
    if (addable) return false;
  }
  return true;
}

SubsetCount n_sep_max(const FiniteMetricSpace& space, const Rational& eps) {
  require_positive(eps);
  require_searchable(space);
  return CliqueSearch(separation_graph(space, eps)).run(space.size());
}

SubsetValue s_max(const FiniteMetricSpace& space, const Rational& eps) {
  require_positive(eps);
  require_searchable(space);
  auto adj = separation_graph(space, eps);
  return detail::with_weights(space, [&](const auto& w) { return MaxSigmaSearch(w, adj).run(); });
}

SubsetCount n_net_min(const FiniteMetricSpace& space, const Rational& eps) {
  require_positive(eps);
  require_searchable(space);
  CoverSearch<std::int64_t, false> search(nullptr, cover_sets(space, eps), space.size());
  search.run();
  return {static_cast<std::size_t>(search.best_count()), to_indices(search.best())};
}

SubsetValue alpha_min(const FiniteMetricSpace& space, const Rational& eps) {
  require_positive(eps);
  require_searchable(space);
  auto cover = cover_sets(space, eps);
  return detail::with_weights(space, [&](const auto& w) {
    using W = std::decay_t<decltype(w.w.front())>;
    CoverSearch<W, true> search(&w, cover, space.size());
    search.run();
    return SubsetValue{w.to_rational(search.best_value()), to_indices(search.best())};
  });
}

std::vector<Rational> profile_sample_points(const FiniteMetricSpace& space) {
  const auto& bps = space.distances();
  std::vector<Rational> points;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (i > 0) points.push_back((bps[i - 1] + bps[i]) / 2);
    points.push_back(bps[i]);
  }
  points.push_back(space.diameter() + 1);
  return points;
}

SeparationProfile profile(const FiniteMetricSpace& space) {
  require_searchable(space);
  SeparationProfile out;
  out.breakpoints = space.distances();
  for (const Rational& eps : profile_sample_points(space)) {
    out.samples.push_back(ProfileSample{eps, s_max(space, eps), alpha_min(space, eps), n_sep_max(space, eps),
                                        n_net_min(space, eps)});
  }
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    const auto& lo = out.samples[i - 1];
    const auto& hi = out.samples[i];
    if (hi.s.value > lo.s.value || hi.n_sep.count > lo.n_sep.count || hi.n_net.count > lo.n_net.count) {
      throw std::logic_error("separation profile is not monotone at eps = " + hi.eps.str());
    }
  }
  const auto& last = out.samples.back();
  if (last.n_sep.count != 1 || !last.s.value.is_zero()) {
    throw std::logic_error("profile beyond the diameter must have N = 1 and s = 0");
  }
  const auto& first = out.samples.front();
  if (first.n_sep.count != space.size() || first.s.value != sigma(space)) {
    throw std::logic_error("profile at the smallest distance must cover the whole space");
  }
  return out;
}

const ProfileSample& SeparationProfile::at(const Rational& eps) const {
  require_positive(eps);
  const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), eps);
  const Rational& key = it == breakpoints.end() ? samples.back().eps : *it;
  const auto sample = std::lower_bound(samples.begin(), samples.end(), key,
                                       [](const ProfileSample& s, const Rational& e) { return s.eps < e; });
  return *sample;
}

}  // namespace plastic
