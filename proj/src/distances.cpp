#include "affiliation/distances.hpp"

#include "affiliation/detail/spans.hpp"
#include "affiliation/errors.hpp"

namespace affiliation {

double dist_point_to_set(double x, std::span<const Interval> ys) {
  const auto spans = detail::normalized(detail::to_spans(ys));
  return detail::distance_to(x, spans);
}

double avg_directed_distance(std::span<const Interval> xs, std::span<const Interval> ys) {
  if (xs.empty()) throw InputError("average directed distance from an empty set is undefined");
  if (ys.empty()) return kInfiniteDistance;
  const auto sources = detail::normalized(detail::to_spans(xs));
  const auto targets = detail::normalized(detail::to_spans(ys));
  double area = 0.0;
  double length = 0.0;
  for (const auto& s : sources) {
    area += detail::integrate_distance(s.lo, s.hi, targets);
    length += s.length();
  }
  return area / length;
}

IndividualDistances individual_distances(const AffiliationZone& zone,
                                         std::span<const Interval> pred_fragments) {
  const Interval event[] = {zone.event};
  if (pred_fragments.empty()) return {std::nullopt, kInfiniteDistance};
  return {avg_directed_distance(pred_fragments, event),
          avg_directed_distance(event, pred_fragments)};
}

}  // namespace affiliation
