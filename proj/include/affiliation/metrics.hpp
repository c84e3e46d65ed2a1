#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "affiliation/events.hpp"

namespace affiliation {

/// Local result for one ground-truth event. An empty optional means
/// "undefined" and is serialized as NaN; it happens exactly when no prediction
/// is affiliated to the zone.
struct ZoneScore {
  std::size_t zone_index;
  Interval zone;
  double event_start;
  double event_stop;  // equals event_start for point anomalies
  std::optional<double> d_precision;
  double d_recall;  // +infinity when nothing is affiliated
  std::optional<double> p_precision;
  double p_recall;
  /// Mean signed offset (nearest prediction time minus ground-truth time) over
  /// the event; positive means predictions tend to come late. Only filled when
  /// EvaluateOptions::directional is set and predictions exist.
  std::optional<double> d_recall_signed;
};

struct EvaluationReport {
  std::optional<double> precision;
  double recall;
  std::optional<double> f1;
  std::vector<ZoneScore> zone_scores;
  std::size_t s_size;    // zones with at least one affiliated prediction
  std::size_t n_events;  // ground-truth events
  Interval range;
};

struct EvaluateOptions {
  bool directional = false;
};

struct PrecisionRecall {
  std::optional<double> precision;
  double recall;
};

/// Mean survival of the affiliated predictions; empty when there are none.
/// Equals 1 iff every fragment lies inside the event.
std::optional<double> individual_precision_probability(const AffiliationZone& zone,
                                                       std::span<const Interval> pred_fragments);

/// Mean survival over the event of its distance to the predictions; 0 when
/// there are none, 1 iff the event is covered.
double individual_recall_probability(const AffiliationZone& zone,
                                     std::span<const Interval> pred_fragments);

/// Precision averages the defined zone precisions only; recall averages all
/// zones. Throws ContractViolation on an empty list.
PrecisionRecall aggregate(std::span<const ZoneScore> zone_scores);

/// Harmonic mean; undefined if either input is undefined or both are 0.
std::optional<double> f1(std::optional<double> precision, std::optional<double> recall);

/// Full pipeline on range events. Ground truth must be non-empty and every
/// event of either series must lie inside `range`.
EvaluationReport evaluate(const EventSeries& gt, const EventSeries& pred, const Interval& range,
                          const EvaluateOptions& options = {});

/// Point anomalies: every ground-truth event and prediction is an instant.
EvaluationReport evaluate_point_anomalies(std::span<const double> gt_points,
                                          std::span<const double> pred_points,
                                          const Interval& range);

/// Range ground truth scored against instantaneous predictions.
EvaluationReport evaluate_point_anomalies(const EventSeries& gt,
                                          std::span<const double> pred_points,
                                          const Interval& range);

/// Single-zone shortcuts for instantaneous predictions, used by the
/// theoretical scenarios and Monte-Carlo checks.
std::optional<double> point_precision_probability(const AffiliationZone& zone,
                                                  std::span<const double> pred_points);
double point_recall_probability(const AffiliationZone& zone, std::span<const double> pred_points);

}  // namespace affiliation
