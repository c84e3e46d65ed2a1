#include "affiliation/survival.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "affiliation/detail/spans.hpp"
#include "affiliation/errors.hpp"

namespace affiliation {

namespace {

// 1 - (event_len + min(d, near) + d) / zone_len on (0, far], 1 at 0, 0 beyond.
double survival_from_gaps(double zone_len, double event_len, double near_gap, double far_gap,
                          double d) {
  if (std::isnan(d) || d < 0.0) throw InputError("distance must be non-negative");
  if (d == 0.0) return 1.0;
  if (d > far_gap) return 0.0;
  const double value = 1.0 - (event_len + std::min(d, near_gap) + d) / zone_len;
  return std::max(0.0, value);
}

// Relative slack used when checking piece contracts on computed breakpoints.
double slack(const Interval& zone) { return 1e-9 * zone.duration(); }

std::vector<RecallPiece> cut_recall(const AffiliationZone& zone,
                                    std::vector<detail::Span> spans) {
  if (spans.empty()) {
    throw ContractViolation("recall pieces need at least one affiliated prediction");
  }
  spans = detail::normalized(std::move(spans));
  const double a = zone.event.start();
  const double b = zone.event.stop();
  const double A = zone.zone.start();
  const double B = zone.zone.stop();

  std::vector<double> cuts{a, b};
  auto add = [&](double t) {
    if (t > a && t < b) cuts.push_back(t);
  };
  add(0.5 * (A + B));  // the near gap of y switches border here
  for (std::size_t k = 0; k < spans.size(); ++k) {
    add(spans[k].lo);
    add(spans[k].hi);
    if (k + 1 < spans.size()) add(0.5 * (spans[k].hi + spans[k + 1].lo));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<RecallPiece> pieces;
  auto emit = [&](double u, double v, bool covered, double pivot) {
    if (!(v > u)) return;
    const Interval iv(u, v);
    const double mid = iv.midpoint();
    if (covered) {
      pieces.push_back({iv, true, mid, 0.0, std::min(mid - A, B - mid)});
    } else {
      pieces.push_back({iv, false, pivot, std::abs(pivot - mid), std::min(mid - A, B - mid)});
    }
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double u = cuts[i];
    const double v = cuts[i + 1];
    const double mid = 0.5 * (u + v);
    const double pivot = detail::nearest_point(mid, spans);
    if (pivot == mid) {
      emit(u, v, true, mid);
      continue;
    }
    // dist(y) = |pivot - y| meets the near gap of y where y is equidistant
    // from the pivot and a zone border.
    std::vector<double> inner{u};
    for (double t : {0.5 * (pivot + A), 0.5 * (pivot + B)}) {
      if (t > u && t < v) inner.push_back(t);
    }
    inner.push_back(v);
    std::sort(inner.begin(), inner.end());
    for (std::size_t k = 0; k + 1 < inner.size(); ++k) emit(inner[k], inner[k + 1], false, pivot);
  }
  return pieces;
}

}  // namespace

double survival_precision(const AffiliationZone& zone, double d) {
  return survival_from_gaps(zone.zone.duration(), zone.event.duration(), zone.near_gap,
                            zone.far_gap, d);
}

double survival_precision(const PointZone& zone, double d) {
  return survival_from_gaps(zone.zone.duration(), 0.0, zone.near_gap, zone.far_gap, d);
}

RecallSample RecallSample::at(const Interval& zone, double y) {
  if (!(zone.start() <= y && y <= zone.stop())) {
    throw InputError("recall sample " + std::to_string(y) + " lies outside its zone");
  }
  const double left = y - zone.start();
  const double right = zone.stop() - y;
  return {y, std::min(left, right), std::max(left, right)};
}

double survival_recall(const Interval& zone, const RecallSample& sample, double d) {
  if (!(zone.start() <= sample.y && sample.y <= zone.stop())) {
    throw InputError("recall sample lies outside its zone");
  }
  return survival_from_gaps(zone.duration(), 0.0, sample.near_gap, sample.far_gap, d);
}

double survival_recall(const AffiliationZone& zone, const RecallSample& sample, double d) {
  return survival_recall(zone.zone, sample, d);
}

std::vector<PrecisionPiece> cut_precision_pieces(const Interval& fragment,
                                                 const AffiliationZone& zone) {
  const double a = zone.event.start();
  const double b = zone.event.stop();
  std::vector<double> cuts{fragment.start(), fragment.stop()};
  for (double t : {a, b, a - zone.near_gap, b + zone.near_gap}) {
    if (t > fragment.start() && t < fragment.stop()) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<PrecisionPiece> pieces;
  pieces.reserve(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval iv(cuts[i], cuts[i + 1]);
    const double mid = iv.midpoint();
    if (mid < a) {
      pieces.push_back({iv, Side::kBeforeEvent, a - iv.stop(), a - iv.start(), a - mid});
    } else if (mid < b) {
      pieces.push_back({iv, Side::kInsideEvent, 0.0, 0.0, 0.0});
    } else {
      pieces.push_back({iv, Side::kAfterEvent, iv.start() - b, iv.stop() - b, mid - b});
    }
  }
  return pieces;
}

double integrate_precision_piece(const PrecisionPiece& piece, const AffiliationZone& zone) {
  const double width = piece.interval.duration();
  if (piece.side == Side::kInsideEvent) return width;
  const double m = zone.near_gap;
  const double eps = slack(zone.zone);
  if (piece.d_min < m - eps && piece.d_max > m + eps) {
    throw ContractViolation("precision piece straddles the near-gap breakpoint");
  }
  const double value = 1.0 - (zone.event.duration() + std::min(piece.d_center, m) +
                              piece.d_center) / zone.zone.duration();
  return width * std::max(0.0, value);
}

std::vector<RecallPiece> cut_recall_pieces(const AffiliationZone& zone,
                                           std::span<const Interval> pred_fragments) {
  return cut_recall(zone, detail::to_spans(pred_fragments));
}

std::vector<RecallPiece> cut_recall_pieces_for_points(const AffiliationZone& zone,
                                                      std::span<const double> pred_points) {
  return cut_recall(zone, detail::to_spans(pred_points));
}

double integrate_recall_piece(const RecallPiece& piece, const AffiliationZone& zone) {
  const double width = piece.interval.duration();
  if (piece.covered) return width;
  const Interval& I = zone.zone;
  const double eps = slack(I);
  const double u = piece.interval.start();
  const double v = piece.interval.stop();
  if (piece.pivot > u + eps && piece.pivot < v - eps) {
    throw ContractViolation("recall pivot lies strictly inside its piece");
  }
  const double centre = 0.5 * (I.start() + I.stop());
  if (u < centre - eps && v > centre + eps) {
    throw ContractViolation("recall piece straddles the zone centre");
  }
  auto excess = [&](double y) {
    return std::abs(piece.pivot - y) - std::min(y - I.start(), I.stop() - y);
  };
  if ((excess(u) < -eps && excess(v) > eps) || (excess(u) > eps && excess(v) < -eps)) {
    throw ContractViolation("recall piece straddles the near-gap breakpoint");
  }
  const double value =
      1.0 - (std::min(piece.d_pivot, piece.m_center) + piece.d_pivot) / I.duration();
  return width * std::max(0.0, value);
}

}  // namespace affiliation
