#include "affiliation/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "affiliation/detail/spans.hpp"
#include "affiliation/distances.hpp"
#include "affiliation/errors.hpp"
#include "affiliation/survival.hpp"

namespace affiliation {

namespace {

void require_inside(const Interval& range, double lo, double hi, const char* what,
                    std::size_t index) {
  if (lo < range.start() || hi > range.stop()) {
    throw InputError(std::string(what) + " " + std::to_string(index) +
                     " lies outside the evaluation range");
  }
}

std::vector<Interval> zone_bounds(std::span<const AffiliationZone> zones) {
  std::vector<Interval> out;
  out.reserve(zones.size());
  for (const auto& z : zones) out.push_back(z.zone);
  return out;
}

double signed_recall_offset(const AffiliationZone& zone, std::span<const RecallPiece> pieces) {
  double total = 0.0;
  for (const auto& piece : pieces) {
    if (!piece.covered) total += piece.interval.duration() * (piece.pivot - piece.interval.midpoint());
  }
  return total / zone.event.duration();
}

double recall_from_pieces(const AffiliationZone& zone, std::span<const RecallPiece> pieces) {
  double area = 0.0;
  for (const auto& piece : pieces) area += integrate_recall_piece(piece, zone);
  return std::clamp(area / zone.event.duration(), 0.0, 1.0);
}

EvaluationReport assemble(std::vector<ZoneScore> scores, const Interval& range) {
  const auto [precision, recall] = aggregate(scores);
  EvaluationReport report{precision, recall, f1(precision, recall), {}, 0, scores.size(), range};
  report.s_size = static_cast<std::size_t>(std::count_if(
      scores.begin(), scores.end(), [](const ZoneScore& s) { return s.p_precision.has_value(); }));
  report.zone_scores = std::move(scores);
  return report;
}

std::vector<double> sorted_points(std::span<const double> points, const Interval& range) {
  std::vector<double> out(points.begin(), points.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i])) throw InputError("predicted point " + std::to_string(i) + " is not finite");
    require_inside(range, out[i], out[i], "predicted point", i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<double> individual_precision_probability(const AffiliationZone& zone,
                                                       std::span<const Interval> pred_fragments) {
  if (pred_fragments.empty()) return std::nullopt;
  double area = 0.0;
  double length = 0.0;
  for (const auto& fragment : pred_fragments) {
    for (const auto& piece : cut_precision_pieces(fragment, zone)) {
      area += integrate_precision_piece(piece, zone);
    }
    length += fragment.duration();
  }
  return std::clamp(area / length, 0.0, 1.0);
}

double individual_recall_probability(const AffiliationZone& zone,
                                     std::span<const Interval> pred_fragments) {
  if (pred_fragments.empty()) return 0.0;
  return recall_from_pieces(zone, cut_recall_pieces(zone, pred_fragments));
}

std::optional<double> point_precision_probability(const AffiliationZone& zone,
                                                  std::span<const double> pred_points) {
  if (pred_points.empty()) return std::nullopt;
  const detail::Span event[] = {{zone.event.start(), zone.event.stop()}};
  double total = 0.0;
  for (double x : pred_points) total += survival_precision(zone, detail::distance_to(x, event));
  return total / static_cast<double>(pred_points.size());
}

double point_recall_probability(const AffiliationZone& zone, std::span<const double> pred_points) {
  if (pred_points.empty()) return 0.0;
  return recall_from_pieces(zone, cut_recall_pieces_for_points(zone, pred_points));
}

PrecisionRecall aggregate(std::span<const ZoneScore> zone_scores) {
  if (zone_scores.empty()) throw ContractViolation("aggregate needs at least one zone");
  double precision_sum = 0.0;
  std::size_t defined = 0;
  double recall_sum = 0.0;
  for (const auto& s : zone_scores) {
    if (s.p_precision) {
      precision_sum += *s.p_precision;
      ++defined;
    }
    recall_sum += s.p_recall;
  }
  PrecisionRecall out{std::nullopt, recall_sum / static_cast<double>(zone_scores.size())};
  if (defined > 0) out.precision = precision_sum / static_cast<double>(defined);
  return out;
}

std::optional<double> f1(std::optional<double> precision, std::optional<double> recall) {
  if (!precision || !recall) return std::nullopt;
  const double sum = *precision + *recall;
  if (sum == 0.0) return std::nullopt;
  return 2.0 * *precision * *recall / sum;
}

EvaluationReport evaluate(const EventSeries& gt, const EventSeries& pred, const Interval& range,
                          const EvaluateOptions& options) {
  const auto zones = affiliation_zones(gt, range);
  const auto& pe = pred.events();
  for (std::size_t i = 0; i < pe.size(); ++i) {
    require_inside(range, pe[i].start(), pe[i].stop(), "predicted event", i);
  }
  const auto fragments = affiliate(pred, zones);

  std::vector<ZoneScore> scores;
  scores.reserve(zones.size());
  for (std::size_t j = 0; j < zones.size(); ++j) {
    const AffiliationZone& zone = zones[j];
    const auto& frag = fragments[j];
    const auto distances = individual_distances(zone, frag);
    ZoneScore score{j,
                    zone.zone,
                    zone.event.start(),
                    zone.event.stop(),
                    distances.precision,
                    distances.recall,
                    individual_precision_probability(zone, frag),
                    0.0,
                    std::nullopt};
    if (!frag.empty()) {
      const auto pieces = cut_recall_pieces(zone, frag);
      score.p_recall = recall_from_pieces(zone, pieces);
      if (options.directional) score.d_recall_signed = signed_recall_offset(zone, pieces);
    }
    scores.push_back(score);
  }
  return assemble(std::move(scores), range);
}

EvaluationReport evaluate_point_anomalies(std::span<const double> gt_points,
                                          std::span<const double> pred_points,
                                          const Interval& range) {
  const auto zones = point_zones(gt_points, range);
  const auto preds = sorted_points(pred_points, range);
  std::vector<Interval> bounds;
  bounds.reserve(zones.size());
  for (const auto& z : zones) bounds.push_back(z.zone);
  const auto grouped = affiliate_points(preds, bounds);

  std::vector<ZoneScore> scores;
  scores.reserve(zones.size());
  for (std::size_t j = 0; j < zones.size(); ++j) {
    const PointZone& zone = zones[j];
    const auto& pts = grouped[j];
    ZoneScore score{j, zone.zone, zone.point, zone.point, std::nullopt, kInfiniteDistance,
                    std::nullopt, 0.0, std::nullopt};
    if (!pts.empty()) {
      double dist_sum = 0.0;
      double survival_sum = 0.0;
      double nearest = kInfiniteDistance;
      for (double x : pts) {
        const double d = std::abs(x - zone.point);
        dist_sum += d;
        survival_sum += survival_precision(zone, d);
        nearest = std::min(nearest, d);
      }
      const auto n = static_cast<double>(pts.size());
      score.d_precision = dist_sum / n;
      score.p_precision = survival_sum / n;
      score.d_recall = nearest;
      score.p_recall = survival_recall(zone.zone, RecallSample::at(zone.zone, zone.point), nearest);
    }
    scores.push_back(score);
  }
  return assemble(std::move(scores), range);
}

EvaluationReport evaluate_point_anomalies(const EventSeries& gt,
                                          std::span<const double> pred_points,
                                          const Interval& range) {
  const auto zones = affiliation_zones(gt, range);
  const auto preds = sorted_points(pred_points, range);
  const auto grouped = affiliate_points(preds, zone_bounds(zones));

  std::vector<ZoneScore> scores;
  scores.reserve(zones.size());
  for (std::size_t j = 0; j < zones.size(); ++j) {
    const AffiliationZone& zone = zones[j];
    const auto& pts = grouped[j];
    ZoneScore score{j, zone.zone, zone.event.start(), zone.event.stop(), std::nullopt,
                    kInfiniteDistance, std::nullopt, 0.0, std::nullopt};
    if (!pts.empty()) {
      const auto spans = detail::normalized(detail::to_spans(pts));
      const detail::Span event[] = {{zone.event.start(), zone.event.stop()}};
      double dist_sum = 0.0;
      for (double x : pts) dist_sum += detail::distance_to(x, event);
      score.d_precision = dist_sum / static_cast<double>(pts.size());
      score.d_recall = detail::integrate_distance(zone.event.start(), zone.event.stop(), spans) /
                       zone.event.duration();
      score.p_precision = point_precision_probability(zone, pts);
      score.p_recall = point_recall_probability(zone, pts);
    }
    scores.push_back(score);
  }
  return assemble(std::move(scores), range);
}

}  // namespace affiliation
