#pragma once

#include <span>
#include <vector>

#include "affiliation/events.hpp"

// Closed spans [lo, hi] with lo <= hi. Unlike Interval they may have zero
// width, which lets point predictions share the range code paths.
namespace affiliation::detail {

struct Span {
  double lo;
  double hi;

  double length() const { return hi - lo; }
};

std::vector<Span> to_spans(std::span<const Interval> intervals);
std::vector<Span> to_spans(std::span<const double> points);

// Sorts and merges overlapping spans.
std::vector<Span> normalized(std::vector<Span> spans);

// Closest point of the union of `spans` to x. Spans must be sorted and disjoint
// and non-empty.
double nearest_point(double x, std::span<const Span> spans);

// dist(x, spans); +infinity when spans is empty.
double distance_to(double x, std::span<const Span> spans);

// Exact integral of dist(x, spans) over x in [from, to]. Spans sorted and
// disjoint; the integrand is linear between span endpoints and gap midpoints.
double integrate_distance(double from, double to, std::span<const Span> spans);

}  // namespace affiliation::detail
