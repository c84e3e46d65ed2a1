#include "affiliation/baselines.hpp"

#include <algorithm>
#include <string>

#include "affiliation/errors.hpp"

namespace affiliation {

namespace {

void require_binary(std::span<const int> labels, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw InputError(std::string(what) + " label at index " + std::to_string(i) +
                       " is not 0 or 1");
    }
  }
}

}  // namespace

ConfusionCounts confusion_counts(std::span<const int> gt_labels, std::span<const int> pred_labels) {
  if (gt_labels.size() != pred_labels.size()) {
    throw InputError("ground truth and prediction lengths differ (" +
                     std::to_string(gt_labels.size()) + " vs " +
                     std::to_string(pred_labels.size()) + ")");
  }
  require_binary(gt_labels, "ground-truth");
  require_binary(pred_labels, "predicted");
  ConfusionCounts c;
  for (std::size_t i = 0; i < gt_labels.size(); ++i) {
    const bool g = gt_labels[i] == 1;
    const bool p = pred_labels[i] == 1;
    if (g && p) {
      ++c.tp;
    } else if (p) {
      ++c.fp;
    } else if (g) {
      ++c.fn;
    } else {
      ++c.tn;
    }
  }
  return c;
}

ClassicalScores classical_precision_recall(std::span<const int> gt_labels,
                                           std::span<const int> pred_labels) {
  const ConfusionCounts c = confusion_counts(gt_labels, pred_labels);
  ClassicalScores scores;
  if (c.tp + c.fp > 0) scores.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (c.tp + c.fn > 0) scores.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  return scores;
}

std::vector<int> trivial_predictions(std::span<const double> values, const TrivialRule& rule) {
  std::vector<int> labels(values.size());
  std::transform(values.begin(), values.end(), labels.begin(),
                 [&](double v) { return rule.matches(v) ? 1 : 0; });
  return labels;
}

std::vector<int> adversary_predictions(std::span<const int> trivial_labels) {
  require_binary(trivial_labels, "trivial");
  if (std::find(trivial_labels.begin(), trivial_labels.end(), 1) == trivial_labels.end()) {
    throw InputError("trivial labels contain no event to anchor the adversary");
  }
  std::vector<int> out(trivial_labels.size(), 1);
  std::size_t offset = 0;  // position inside the current trivial run
  for (std::size_t i = 0; i < trivial_labels.size(); ++i) {
    if (trivial_labels[i] == 1) {
      out[i] = offset % 2 == 0 ? 1 : 0;
      ++offset;
    } else {
      offset = 0;
    }
  }
  return out;
}

std::vector<int> point_adjust_adversary(std::span<const int> trivial_labels, std::size_t pieces) {
  require_binary(trivial_labels, "trivial");
  const auto trivial_len =
      static_cast<std::size_t>(std::count(trivial_labels.begin(), trivial_labels.end(), 1));
  if (trivial_len == 0) throw InputError("trivial labels contain no event to anchor the adversary");
  if (pieces == 0) throw InputError("point-adjust adversary needs at least one piece");
  std::vector<int> out(trivial_labels.begin(), trivial_labels.end());
  const std::size_t n = out.size();
  const std::size_t width = std::max<std::size_t>(1, trivial_len / (10 * pieces));
  for (std::size_t k = 0; k < pieces; ++k) {
    const std::size_t start = (2 * k + 1) * n / (2 * pieces);
    for (std::size_t i = start; i < std::min(n, start + width); ++i) out[i] = 1;
  }
  return out;
}

}  // namespace affiliation
