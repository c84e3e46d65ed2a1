#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace affiliation {

/// Half-open time span [start, stop) in seconds. Empty spans are not
/// representable: construction throws InputError unless stop > start.
class Interval {
 public:
  Interval(double start, double stop);

  double start() const { return start_; }
  double stop() const { return stop_; }
  double duration() const { return stop_ - start_; }
  double midpoint() const { return 0.5 * (start_ + stop_); }

  bool contains(double t) const { return start_ <= t && t < stop_; }
  bool contains(const Interval& other) const {
    return start_ <= other.start_ && other.stop_ <= stop_;
  }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double start_;
  double stop_;
};

enum class Role { kGroundTruth, kPrediction };

/// Sorted, pairwise disjoint events. Ground-truth events must additionally be
/// separated by a gap: touching events such as [0,5) and [5,9) are rejected
/// because they should have been merged upstream.
class EventSeries {
 public:
  EventSeries(std::vector<Interval> events, Role role);

  const std::vector<Interval>& events() const { return events_; }
  Role role() const { return role_; }
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }
  double total_duration() const;

 private:
  std::vector<Interval> events_;
  Role role_;
};

/// Binary labels sampled at N instants, plus the closing instant t(N+1):
/// timestamps has labels.size() + 1 entries.
struct LabeledSeries {
  std::vector<int> labels;
  std::vector<double> timestamps;

  /// Builds a series from one timestamp per label. When `closing_time` is not
  /// given the last sample width is repeated, t(N+1) = t(N) + (t(N) - t(N-1)),
  /// and a single sample gets unit width.
  static LabeledSeries from_samples(std::vector<int> labels,
                                    std::vector<double> sample_times,
                                    std::optional<double> closing_time = {});

  /// Throws InputError when labels are not binary, sizes disagree or the
  /// timestamps are not strictly increasing.
  void validate() const;

  Interval range() const;
};

/// One ground-truth event [a,b) inside its zone of affiliation [A,B), with the
/// gaps between the event and the zone borders precomputed:
/// near_gap = min(a-A, B-b) and far_gap = max(a-A, B-b).
struct AffiliationZone {
  AffiliationZone(Interval zone, Interval event, std::size_t index);

  Interval zone;
  Interval event;
  double near_gap;
  double far_gap;
  std::size_t index;
};

/// Zone of affiliation for a zero-width ground-truth point.
struct PointZone {
  PointZone(Interval zone, double point, std::size_t index);

  Interval zone;
  double point;
  double near_gap;
  double far_gap;
  std::size_t index;
};

/// Maps each maximal run of 1s at indices i..k to [t(i), t(k+1)).
EventSeries events_from_labels(const LabeledSeries& series, Role role = Role::kPrediction);

/// Inverse of events_from_labels on the same grid: sample i is positive iff
/// t(i) lies inside one of the events.
std::vector<int> labels_from_events(const EventSeries& events,
                                    std::span<const double> timestamps);

/// Partitions `range` into one zone per ground-truth event. Consecutive zones
/// meet at the midpoint of the gap between their events; a time exactly on a
/// boundary belongs to the right-hand zone.
std::vector<AffiliationZone> affiliation_zones(const EventSeries& gt, const Interval& range);

/// Zones for point anomalies; `points` must be strictly increasing and lie in `range`.
std::vector<PointZone> point_zones(std::span<const double> points, const Interval& range);

/// Clips predictions to each zone, splitting events that straddle a boundary.
/// Result j holds pred ∩ zones[j], sorted.
std::vector<std::vector<Interval>> affiliate(const EventSeries& pred,
                                             std::span<const AffiliationZone> zones);

/// Groups point predictions by zone (same half-open boundary rule).
std::vector<std::vector<double>> affiliate_points(std::span<const double> points,
                                                  std::span<const Interval> zones);

}  // namespace affiliation
