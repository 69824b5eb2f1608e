#pragma once

// Finite-instance checks of the structural results on plastic pairs: proper
// measurements, the nonexpansive-surjection rigidity result, the
// separated-image lemma, strong plasticity from s-comparison, and the
// certified contraction margins. Each returns a report; a failed assertion
// under satisfied hypotheses shows up as a counterexample in the report.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plastic/bounds.hpp"
#include "plastic/gauge.hpp"
#include "plastic/metric_space.hpp"
#include "plastic/point_map.hpp"
#include "plastic/search.hpp"

namespace plastic {

/// psi = sigma, or psi = sigma_g for a gauge g.
class Measurement {
 public:
  Measurement() = default;
  explicit Measurement(MonotoneGauge gauge) : gauge_(std::move(gauge)) {}

  [[nodiscard]] Rational operator()(const FiniteMetricSpace& space) const;
  [[nodiscard]] std::string describe() const;

 private:
  std::optional<MonotoneGauge> gauge_;
};

struct MeasurementViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational psi_from;
  Rational psi_to;
  PointMap expansion;
};

struct MeasurementReport {
  std::size_t pairs_checked = 0;
  std::size_t expansions_found = 0;
  std::vector<MeasurementViolation> violations;

  [[nodiscard]] bool proper() const { return violations.empty(); }
};

/// For every ordered pair (i, j) of the catalog (i == j included), looks for
/// an expansion X_i -> X_j and records a violation when one exists but
/// psi(X_j) <= psi(X_i). All spaces must share one size >= 2
/// (std::invalid_argument otherwise).
[[nodiscard]] MeasurementReport proper_measurement_check(std::span<const FiniteMetricSpace> catalog,
                                                         const Measurement& psi);

struct SurjectionTheoremReport {
  bool hypothesis_holds = false;
  std::optional<Rational> hypothesis_fails_at;
  std::uint64_t surjections_checked = 0;
  std::optional<PointMap> counterexample;

  [[nodiscard]] bool passed() const { return hypothesis_holds && !counterexample; }
};

/// If alpha(X, t) <= alpha(Y, t) for all t, every nonexpansive surjection
/// X -> Y must be an isometry; enumerates them all and reports the first that
/// is not. Nothing is enumerated when the hypothesis fails.
[[nodiscard]] SurjectionTheoremReport verify_surjection_theorem(const FiniteMetricSpace& x,
                                                                const FiniteMetricSpace& y);

struct SeparatedImageReport {
  bool applicable = false;
  std::string reason;
  Rational s_x;      // s(X, eps)
  Rational s_y;      // s(Y, eps)
  Rational sigma_a;  // sigma(A)
  IndexSet image;
  bool image_maximal = false;

  [[nodiscard]] bool passed() const { return applicable && image_maximal; }
};

/// For noncontractive f, |A| >= 2, A eps-separated, sigma(A) > s(X,eps) - eps
/// and s(X,eps) > s(Y,eps) - eps, checks that f(A) is a maximal
/// eps-separated set of Y. Any failed hypothesis gives applicable = false.
[[nodiscard]] SeparatedImageReport verify_separated_image_lemma(const FiniteMetricSpace& x,
                                                                const FiniteMetricSpace& y, const Rational& eps,
                                                                const PointMap& f, std::span<const Index> a);

struct SComparisonReport {
  bool hypothesis_holds = false;
  std::optional<Rational> hypothesis_fails_at;
  std::optional<PlasticityCheck> plasticity;

  [[nodiscard]] bool passed() const { return hypothesis_holds && plasticity && plasticity->holds; }
};

/// If s(X, t) >= s(Y, t) for all t, the pair must be strongly plastic;
/// decided by full enumeration.
[[nodiscard]] SComparisonReport verify_s_comparison_plasticity(const FiniteMetricSpace& x,
                                                               const FiniteMetricSpace& y);

enum class Threshold {
  kNonStrict,  // E(f) >= level  implies  C(f) >= delta
  kStrict,     // E(f) >  level  implies  C(f) >  delta
};

struct ConclusionCheck {
  bool holds = true;
  std::uint64_t maps_checked = 0;
  std::uint64_t maps_triggered = 0;  // maps meeting the expansion premise
  std::optional<PointMap> counterexample;
};

/// Enumerates every map X -> Y and checks the implication at (level, delta).
[[nodiscard]] ConclusionCheck verify_contraction_conclusion(const FiniteMetricSpace& x,
                                                            const FiniteMetricSpace& y, const Rational& level,
                                                            const Rational& delta, Threshold threshold);

/// Lemma-style certificates are checked non-strictly at their own eps;
/// theorem-style ones (eps0 set) strictly at eps. Throws
/// std::invalid_argument for a non-applicable certificate.
[[nodiscard]] ConclusionCheck verify_certified_delta(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                                                     const CertifiedDelta& certificate);

}  // namespace plastic
