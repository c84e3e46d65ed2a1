#include "affiliation/events.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "affiliation/errors.hpp"

namespace affiliation {

namespace {

std::string describe(const Interval& iv) {
  std::ostringstream out;
  out.precision(17);
  out << '[' << iv.start() << ", " << iv.stop() << ')';
  return out.str();
}

}  // namespace

Interval::Interval(double start, double stop) : start_(start), stop_(stop) {
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw InputError("interval endpoints must be finite");
  }
  if (!(stop > start)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "interval stop must be greater than start (got start=" << start
        << ", stop=" << stop << ")";
    throw InputError(msg.str());
  }
}

EventSeries::EventSeries(std::vector<Interval> events, Role role)
    : events_(std::move(events)), role_(role) {
  for (std::size_t i = 1; i < events_.size(); ++i) {
    const Interval& prev = events_[i - 1];
    const Interval& cur = events_[i];
    const bool separated = role_ == Role::kGroundTruth ? cur.start() > prev.stop()
                                                      : cur.start() >= prev.stop();
    if (!separated) {
      const char* who = role_ == Role::kGroundTruth ? "ground-truth" : "predicted";
      throw InputError(std::string(who) + " events " + std::to_string(i - 1) + " " +
                       describe(prev) + " and " + std::to_string(i) + " " + describe(cur) +
                       " are unsorted, overlapping or touching");
    }
  }
}

double EventSeries::total_duration() const {
  double total = 0.0;
  for (const auto& e : events_) total += e.duration();
  return total;
}

LabeledSeries LabeledSeries::from_samples(std::vector<int> labels,
                                          std::vector<double> sample_times,
                                          std::optional<double> closing_time) {
  if (labels.size() != sample_times.size()) {
    throw InputError("labels and timestamps differ in length (" +
                     std::to_string(labels.size()) + " vs " +
                     std::to_string(sample_times.size()) + ")");
  }
  if (sample_times.empty()) throw InputError("labeled series is empty");
  double last;
  if (closing_time) {
    last = *closing_time;
  } else if (sample_times.size() == 1) {
    last = sample_times.back() + 1.0;
  } else {
    const std::size_t n = sample_times.size();
    last = sample_times[n - 1] + (sample_times[n - 1] - sample_times[n - 2]);
  }
  sample_times.push_back(last);
  LabeledSeries series{std::move(labels), std::move(sample_times)};
  series.validate();
  return series;
}

void LabeledSeries::validate() const {
  if (labels.empty()) throw InputError("labeled series is empty");
  if (timestamps.size() != labels.size() + 1) {
    throw InputError("expected " + std::to_string(labels.size() + 1) +
                     " timestamps (one per sample plus the closing instant), got " +
                     std::to_string(timestamps.size()));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw InputError("label at index " + std::to_string(i) + " is " +
                       std::to_string(labels[i]) + ", expected 0 or 1");
    }
  }
  for (std::size_t i = 0; i < timestamps.size(); ++i) {
    if (!std::isfinite(timestamps[i])) {
      throw InputError("timestamp at index " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(timestamps[i] > timestamps[i - 1])) {
      throw InputError("timestamps are not strictly increasing at index " + std::to_string(i));
    }
  }
}

Interval LabeledSeries::range() const { return Interval(timestamps.front(), timestamps.back()); }

AffiliationZone::AffiliationZone(Interval zone_, Interval event_, std::size_t index_)
    : zone(zone_), event(event_), index(index_) {
  if (!zone.contains(event)) {
    throw InputError("ground-truth event " + describe(event) + " lies outside its zone " +
                     describe(zone));
  }
  const double left = event.start() - zone.start();
  const double right = zone.stop() - event.stop();
  near_gap = std::min(left, right);
  far_gap = std::max(left, right);
}

PointZone::PointZone(Interval zone_, double point_, std::size_t index_)
    : zone(zone_), point(point_), index(index_) {
  if (!(zone.start() <= point && point <= zone.stop())) {
    throw InputError("ground-truth point lies outside its zone " + describe(zone));
  }
  const double left = point - zone.start();
  const double right = zone.stop() - point;
  near_gap = std::min(left, right);
  far_gap = std::max(left, right);
}

EventSeries events_from_labels(const LabeledSeries& series, Role role) {
  series.validate();
  std::vector<Interval> events;
  const auto& labels = series.labels;
  const auto& t = series.timestamps;
  std::size_t i = 0;
  while (i < labels.size()) {
    if (labels[i] == 0) {
      ++i;
      continue;
    }
    std::size_t k = i;
    while (k + 1 < labels.size() && labels[k + 1] == 1) ++k;
    events.emplace_back(t[i], t[k + 1]);
    i = k + 1;
  }
  return EventSeries(std::move(events), role);
}

std::vector<int> labels_from_events(const EventSeries& events, std::span<const double> timestamps) {
  if (timestamps.empty()) return {};
  std::vector<int> labels(timestamps.size() - 1, 0);
  std::size_t e = 0;
  const auto& ev = events.events();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    while (e < ev.size() && ev[e].stop() <= timestamps[i]) ++e;
    if (e < ev.size() && ev[e].contains(timestamps[i])) labels[i] = 1;
  }
  return labels;
}

std::vector<AffiliationZone> affiliation_zones(const EventSeries& gt, const Interval& range) {
  if (gt.empty()) throw InputError("ground truth has no events");
  if (gt.role() != Role::kGroundTruth) {
    // Re-validate with the stricter ground-truth separation rule.
    EventSeries checked(gt.events(), Role::kGroundTruth);
    return affiliation_zones(checked, range);
  }
  const auto& ev = gt.events();
  for (std::size_t j = 0; j < ev.size(); ++j) {
    if (!range.contains(ev[j])) {
      throw InputError("ground-truth event " + std::to_string(j) + " " + describe(ev[j]) +
                       " lies outside the evaluation range " + describe(range));
    }
  }
  std::vector<AffiliationZone> zones;
  zones.reserve(ev.size());
  double left = range.start();
  for (std::size_t j = 0; j < ev.size(); ++j) {
    const double right =
        j + 1 < ev.size() ? 0.5 * (ev[j].stop() + ev[j + 1].start()) : range.stop();
    zones.emplace_back(Interval(left, right), ev[j], j);
    left = right;
  }
  return zones;
}

std::vector<PointZone> point_zones(std::span<const double> points, const Interval& range) {
  if (points.empty()) throw InputError("ground truth has no points");
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (!range.contains(points[j])) {
      throw InputError("ground-truth point " + std::to_string(j) +
                       " lies outside the evaluation range " + describe(range));
    }
    if (j > 0 && !(points[j] > points[j - 1])) {
      throw InputError("ground-truth points are not strictly increasing at index " +
                       std::to_string(j));
    }
  }
  std::vector<PointZone> zones;
  zones.reserve(points.size());
  double left = range.start();
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double right =
        j + 1 < points.size() ? 0.5 * (points[j] + points[j + 1]) : range.stop();
    zones.emplace_back(Interval(left, right), points[j], j);
    left = right;
  }
  return zones;
}

std::vector<std::vector<Interval>> affiliate(const EventSeries& pred,
                                             std::span<const AffiliationZone> zones) {
  std::vector<std::vector<Interval>> fragments(zones.size());
  std::size_t z = 0;
  for (const Interval& p : pred.events()) {
    while (z < zones.size() && zones[z].zone.stop() <= p.start()) ++z;
    for (std::size_t k = z; k < zones.size() && zones[k].zone.start() < p.stop(); ++k) {
      const double lo = std::max(p.start(), zones[k].zone.start());
      const double hi = std::min(p.stop(), zones[k].zone.stop());
      if (hi > lo) fragments[k].emplace_back(lo, hi);
    }
  }
  return fragments;
}

std::vector<std::vector<double>> affiliate_points(std::span<const double> points,
                                                  std::span<const Interval> zones) {
  std::vector<std::vector<double>> grouped(zones.size());
  for (double x : points) {
    auto it = std::upper_bound(zones.begin(), zones.end(), x,
                               [](double v, const Interval& zone) { return v < zone.stop(); });
    if (it == zones.end()) {
      // The closing instant of the range belongs to the last zone.
      if (!zones.empty() && x == zones.back().stop()) grouped.back().push_back(x);
      continue;
    }
    if (it->start() <= x) grouped[static_cast<std::size_t>(it - zones.begin())].push_back(x);
  }
  for (auto& g : grouped) std::sort(g.begin(), g.end());
  return grouped;
}

}  // namespace affiliation
