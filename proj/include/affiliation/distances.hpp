#pragma once

#include <limits>
#include <optional>
#include <span>

#include "affiliation/events.hpp"

namespace affiliation {

/// Distance to an empty target set.
inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/// min over y in Y of |x - y|, using interval closures (0 at a right endpoint).
/// Returns kInfiniteDistance when Y is empty.
double dist_point_to_set(double x, std::span<const Interval> ys);

/// Average directed distance (1/|X|) ∫_X dist(x, Y) dx, integrated exactly.
/// Not symmetric. Zero iff X ⊆ Y; kInfiniteDistance when Y is empty.
/// Throws InputError when X is empty, where the distance is undefined.
/// Inputs need not be sorted; overlapping members are merged.
double avg_directed_distance(std::span<const Interval> xs, std::span<const Interval> ys);

struct IndividualDistances {
  std::optional<double> precision;  // dist(pred ∩ I_j, gt_j); empty when nothing is affiliated
  double recall;                    // dist(gt_j, pred ∩ I_j); infinite when nothing is affiliated
};

IndividualDistances individual_distances(const AffiliationZone& zone,
                                         std::span<const Interval> pred_fragments);

}  // namespace affiliation
