#include "affiliation/theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "affiliation/errors.hpp"

namespace affiliation::theory {

namespace {

void require_proportion(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InputError("proportion p must lie in (0, 1], got " + std::to_string(p));
  }
}

double positive_part_squared(double x) {
  const double pos = std::max(0.0, x);
  return pos * pos;
}

}  // namespace

Scores whole_interval_scores(double p) {
  require_proportion(p);
  return {0.5 + 0.5 * p * p, 1.0};
}

Scores expected_random_scores(double p) {
  require_proportion(p);
  return {0.5 + 0.5 * p * p, 0.5};
}

std::string_view position_name(Position position) {
  switch (position) {
    case Position::kBorder:
      return "border";
    case Position::kHalfway:
      return "halfway";
    case Position::kFirstElement:
      return "first-element";
    case Position::kCenter:
      return "center";
  }
  return "unknown";
}

double position_coordinate(Position position, double p) {
  require_proportion(p);
  const double event_start = 0.5 - 0.5 * p;
  switch (position) {
    case Position::kBorder:
      return 0.0;
    case Position::kHalfway:
      return 0.5 * event_start;
    case Position::kFirstElement:
      return event_start;
    case Position::kCenter:
      return 0.5;
  }
  throw ContractViolation("unknown position");
}

Scores single_position_scores(Position position, double p) {
  require_proportion(p);
  switch (position) {
    case Position::kBorder:
      return {0.0, p / 4.0};
    case Position::kHalfway:
      return {0.5 - p / 2.0, 0.5 - p / 2.0 + 25.0 / (64.0 * p) * positive_part_squared(p - 0.2)};
    case Position::kFirstElement:
      // Beyond p = 1/3 the far end of the event is closer to the zone border
      // than to the prediction, which adds the 9/(16p) term.
      return {1.0, 1.0 - p + 9.0 / (16.0 * p) * positive_part_squared(p - 1.0 / 3.0)};
    case Position::kCenter:
      return {1.0, 1.0 - p / 2.0 + 1.0 / (2.0 * p) * positive_part_squared(p - 0.5)};
  }
  throw ContractViolation("unknown position");
}

AffiliationZone centered_zone(double p) {
  require_proportion(p);
  return AffiliationZone(Interval(0.0, 1.0), Interval(0.5 - 0.5 * p, 0.5 + 0.5 * p), 0);
}

std::vector<CurveRow> emit_curves(std::span<const double> grid) {
  std::vector<CurveRow> rows;
  rows.reserve(grid.size() * std::size(kAllPositions));
  for (Position position : kAllPositions) {
    for (double p : grid) {
      const Scores s = single_position_scores(position, p);
      rows.push_back({p, position, s.precision, s.recall});
    }
  }
  return rows;
}

std::vector<double> uniform_grid(std::size_t points) {
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = static_cast<double>(k + 1) / static_cast<double>(points);
  }
  return grid;
}

}  // namespace affiliation::theory
