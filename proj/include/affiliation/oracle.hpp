#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "affiliation/events.hpp"

// Brute-force references for the closed forms. Nothing here reuses the
// piece-cutting code: survival values come from measuring the set of zone
// points at least d away, distances from a direct scan, and integrals from
// the trapezoidal rule. Slow by construction.
namespace affiliation::oracle {

struct OracleConfig {
  /// Trapezoid panel width in seconds; defaults to |zone| / 1e5 when unset.
  std::optional<double> grid_step;
  /// Lower bound on panels per integrated interval, so short fragments are
  /// resolved as finely as long ones.
  std::size_t min_panels = 100000;
  std::size_t mc_samples = 1000000;
  /// Seeds std::mt19937_64. Streams are reproducible on a given standard library.
  std::uint64_t rng_seed = 42;

  void validate() const;
};

struct Estimate {
  double value;
  double std_error;
};

/// Fraction of uniform draws U in the zone with dist(U, gt_j) >= d.
Estimate survival_precision_mc(const AffiliationZone& zone, double d, const OracleConfig& config);

/// P(dist(U, gt_j) >= d) computed as the measure of the qualifying part of the zone.
double survival_precision_measure(const AffiliationZone& zone, double d);

/// P(|U - y| >= d) for U uniform in the zone.
double survival_recall_measure(const Interval& zone, double y, double d);

struct NumericProbabilities {
  std::optional<double> precision;
  double recall;
};

/// Trapezoidal integration of the individual precision and recall integrands.
/// The recall integrand is continuous, so its error is O(step^2); the precision
/// integrand jumps at the event borders, giving an error of at most one panel
/// width per border relative to the fragment length.
NumericProbabilities probabilities_numeric(const AffiliationZone& zone,
                                           std::span<const Interval> pred_fragments,
                                           const OracleConfig& config);

/// Mean individual recall over uniformly drawn single-point predictions.
/// Converges to 1/2 for any zone geometry.
Estimate expected_recall_mc(const AffiliationZone& zone, const OracleConfig& config);

/// Mean individual precision over uniformly drawn single-point predictions.
Estimate expected_precision_mc(const AffiliationZone& zone, const OracleConfig& config);

struct NumericReport {
  std::vector<NumericProbabilities> zones;
  std::optional<double> precision;
  double recall;
};

/// Whole-pipeline numeric evaluation.
NumericReport evaluate_numeric(const EventSeries& gt, const EventSeries& pred,
                               const Interval& range, const OracleConfig& config);

}  // namespace affiliation::oracle
