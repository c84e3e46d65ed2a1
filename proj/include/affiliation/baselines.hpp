#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace affiliation {

/// Sample-level confusion matrix.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
};

struct ClassicalScores {
  std::optional<double> precision;  // undefined without positive predictions
  std::optional<double> recall;     // undefined without positive ground truth
};

ConfusionCounts confusion_counts(std::span<const int> gt_labels, std::span<const int> pred_labels);

/// TP/(TP+FP) and TP/(TP+FN). Throws InputError on length mismatch or
/// non-binary labels.
ClassicalScores classical_precision_recall(std::span<const int> gt_labels,
                                           std::span<const int> pred_labels);

/// Single-threshold rule such as `value < 1250`.
struct TrivialRule {
  enum class Direction { kBelow, kAbove };

  double threshold;
  Direction direction;

  bool matches(double value) const {
    return direction == Direction::kBelow ? value < threshold : value > threshold;
  }
};

std::vector<int> trivial_predictions(std::span<const double> values, const TrivialRule& rule);

/// Alternates 1,0,1,0,... inside every run of the trivial labels (starting
/// with 1) and labels every other sample positive. Throws InputError when the
/// input has no positive sample.
std::vector<int> adversary_predictions(std::span<const int> trivial_labels);

/// Variant targeting point-adjusted scores: keeps the trivial runs and adds
/// `pieces` short predictions, each about a tenth of the trivial duration
/// divided by `pieces` samples long (at least one sample), regularly spaced
/// across the series.
std::vector<int> point_adjust_adversary(std::span<const int> trivial_labels, std::size_t pieces);

}  // namespace affiliation
