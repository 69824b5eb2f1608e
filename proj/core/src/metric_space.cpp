#include "plastic/metric_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace plastic {

namespace {

ValidationReport violation(Axiom axiom, std::vector<Index> witness, std::string message) {
  return ValidationReport{axiom, std::move(witness), std::move(message)};
}

}  // namespace

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::kOk: return "ok";
    case Axiom::kDimension: return "dimension";
    case Axiom::kDuplicateLabel: return "duplicate_label";
    case Axiom::kDiagonal: return "diagonal";
    case Axiom::kPositivity: return "positivity";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kTriangle: return "triangle";
  }
  return "unknown";
}

ValidationReport validate(const SpaceData& data) {
  const std::size_t n = data.labels.size();
  if (data.dist.size() != n) {
    std::ostringstream msg;
    msg << "distance matrix has " << data.dist.size() << " rows but there are " << n << " labels";
    return violation(Axiom::kDimension, {}, msg.str());
  }
  for (Index i = 0; i < n; ++i) {
    if (data.dist[i].size() != n) {
      std::ostringstream msg;
      msg << "dist[" << i << "] has " << data.dist[i].size() << " entries, expected " << n;
      return violation(Axiom::kDimension, {i}, msg.str());
    }
  }
  if (n == 0) return violation(Axiom::kDimension, {}, "a metric space needs at least one point");

  std::unordered_map<std::string, Index> seen;
  for (Index i = 0; i < n; ++i) {
    auto [it, inserted] = seen.emplace(data.labels[i], i);
    if (!inserted) {
      return violation(Axiom::kDuplicateLabel, {it->second, i},
                       "label '" + data.labels[i] + "' appears more than once");
    }
  }

  for (Index i = 0; i < n; ++i) {
    if (!data.dist[i][i].is_zero()) {
      return violation(Axiom::kDiagonal, {i},
                       "dist[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                           data.dist[i][i].str() + " is not 0");
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (i != j && data.dist[i][j].sign() <= 0) {
        std::ostringstream msg;
        msg << "dist[" << i << "][" << j << "] = " << data.dist[i][j] << " is not positive";
        return violation(Axiom::kPositivity, {i, j}, msg.str());
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (data.dist[i][j] != data.dist[j][i]) {
        std::ostringstream msg;
        msg << "dist[" << i << "][" << j << "] = " << data.dist[i][j] << " but dist[" << j << "][" << i
            << "] = " << data.dist[j][i];
        return violation(Axiom::kSymmetry, {i, j}, msg.str());
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      for (Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (data.dist[i][k] > data.dist[i][j] + data.dist[j][k]) {
          std::ostringstream msg;
          msg << "triangle inequality fails: d(" << i << "," << k << ") = " << data.dist[i][k] << " > d(" << i
              << "," << j << ") + d(" << j << "," << k << ") = " << data.dist[i][j] + data.dist[j][k];
          return violation(Axiom::kTriangle, {i, j, k}, msg.str());
        }
      }
    }
  }
  return {};
}

InvalidSpace::InvalidSpace(ValidationReport report)
    : std::invalid_argument("invalid metric space (" + std::string(to_string(report.violation)) +
                            "): " + report.message),
      report_(std::move(report)) {}

FiniteMetricSpace FiniteMetricSpace::create(SpaceData data) {
  ValidationReport report = validate(data);
  if (!report.ok()) throw InvalidSpace(std::move(report));

  const std::size_t n = data.labels.size();
  auto impl = std::make_shared<Impl>();
  impl->labels = std::move(data.labels);
  impl->dist.reserve(n * n);
  for (auto& row : data.dist) {
    for (auto& value : row) impl->dist.push_back(std::move(value));
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) impl->distinct.push_back(impl->dist[i * n + j]);
  }
  std::sort(impl->distinct.begin(), impl->distinct.end());
  impl->distinct.erase(std::unique(impl->distinct.begin(), impl->distinct.end()), impl->distinct.end());
  return FiniteMetricSpace(std::move(impl));
}

std::optional<Index> FiniteMetricSpace::index_of(std::string_view label) const {
  const auto& labels = impl_->labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Index>(it - labels.begin());
}

Rational FiniteMetricSpace::diameter() const {
  return impl_->distinct.empty() ? Rational{} : impl_->distinct.back();
}

std::optional<Rational> FiniteMetricSpace::min_distance() const {
  if (impl_->distinct.empty()) return std::nullopt;
  return impl_->distinct.front();
}

SpaceData FiniteMetricSpace::data() const {
  const std::size_t n = size();
  SpaceData out;
  out.labels = impl_->labels;
  out.dist.assign(n, std::vector<Rational>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out.dist[i][j] = d(i, j);
  }
  return out;
}

bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->labels == b.impl_->labels && a.impl_->dist == b.impl_->dist;
}

void check_subset(const FiniteMetricSpace& space, std::span<const Index> subset, bool allow_empty) {
  if (subset.empty() && !allow_empty) throw std::invalid_argument("subset must be nonempty");
  std::vector<bool> used(space.size(), false);
  for (Index i : subset) {
    if (i >= space.size()) {
      throw std::invalid_argument("subset index " + std::to_string(i) + " out of range for a " +
                                  std::to_string(space.size()) + "-point space");
    }
    if (used[i]) throw std::invalid_argument("subset repeats index " + std::to_string(i));
    used[i] = true;
  }
}

Rational sigma(const FiniteMetricSpace& space, std::span<const Index> subset) {
  check_subset(space, subset);
  Rational total;
  for (std::size_t p = 0; p < subset.size(); ++p) {
    for (std::size_t q = p + 1; q < subset.size(); ++q) total += space.d(subset[p], subset[q]);
  }
  return total;
}

Rational sigma(const FiniteMetricSpace& space) { return sigma(space, all_points(space)); }

IndexSet all_points(const FiniteMetricSpace& space) {
  IndexSet all(space.size());
  std::iota(all.begin(), all.end(), Index{0});
  return all;
}

}  // namespace plastic
