#pragma once

#include <span>
#include <vector>

#include "affiliation/events.hpp"

namespace affiliation {

// Survival functions compare an observed distance d against a single point
// drawn uniformly in the zone: they return P(distance of the random point >= d).
// Both are 1 at d = 0, linear in d with slope -2/|I| up to the near gap and
// -1/|I| beyond it, and reach 0 at the far gap.

/// Precision survival of zone j. Throws InputError for negative d; an
/// infinite distance maps to 0.
double survival_precision(const AffiliationZone& zone, double d);

/// Point-anomaly variant: the event length term is 0.
double survival_precision(const PointZone& zone, double d);

/// Position of a ground-truth sample y inside its zone [A,B):
/// near_gap = min(y-A, B-y), far_gap = max(y-A, B-y).
struct RecallSample {
  double y;
  double near_gap;
  double far_gap;

  /// Throws InputError when y is outside the closed zone.
  static RecallSample at(const Interval& zone, double y);
};

double survival_recall(const Interval& zone, const RecallSample& sample, double d);
double survival_recall(const AffiliationZone& zone, const RecallSample& sample, double d);

enum class Side { kBeforeEvent, kInsideEvent, kAfterEvent };

/// Part of a predicted fragment on which dist(x, gt_j) is linear and stays on
/// one side of the near gap. Distances are zero for kInsideEvent pieces.
struct PrecisionPiece {
  Interval interval;
  Side side;
  double d_min;
  double d_max;
  double d_center;
};

/// Cuts a fragment at the event borders and at distance near_gap from them.
std::vector<PrecisionPiece> cut_precision_pieces(const Interval& fragment,
                                                 const AffiliationZone& zone);

/// Exact ∫ survival_precision(zone, dist(x, gt_j)) dx over the piece.
/// Throws ContractViolation if the piece straddles the near gap.
double integrate_precision_piece(const PrecisionPiece& piece, const AffiliationZone& zone);

/// Part of gt_j that is either covered by a prediction, or has a single
/// closest prediction endpoint `pivot` and a uniform resolution of
/// min(dist, near gap of y). For covered pieces pivot is the midpoint and both
/// distances are 0.
struct RecallPiece {
  Interval interval;
  bool covered;
  double pivot;
  double d_pivot;   // |pivot - midpoint|
  double m_center;  // near gap of the midpoint
};

/// Partitions gt_j. Throws ContractViolation when there are no predictions.
std::vector<RecallPiece> cut_recall_pieces(const AffiliationZone& zone,
                                           std::span<const Interval> pred_fragments);

/// Same for zero-width predictions.
std::vector<RecallPiece> cut_recall_pieces_for_points(const AffiliationZone& zone,
                                                      std::span<const double> pred_points);

/// Exact ∫ survival_recall(zone, y, dist(y, pred)) dy over the piece.
double integrate_recall_piece(const RecallPiece& piece, const AffiliationZone& zone);

}  // namespace affiliation
