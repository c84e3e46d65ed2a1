#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "affiliation/events.hpp"

// Closed-form scores for one ground-truth event centered in a unit zone and
// occupying a proportion p of it, 0 < p <= 1.
namespace affiliation::theory {

struct Scores {
  double precision;
  double recall;
};

/// Prediction covers the whole zone: (1/2 + p^2/2, 1).
Scores whole_interval_scores(double p);

/// Expectation over a single uniformly random point prediction: (1/2 + p^2/2, 1/2).
Scores expected_random_scores(double p);

/// Where a single instantaneous prediction is placed.
enum class Position {
  kBorder,        // zone border, coordinate 0
  kHalfway,       // halfway between the border and the event
  kFirstElement,  // first instant of the event
  kCenter,        // centre of the event
};

inline constexpr Position kAllPositions[] = {Position::kBorder, Position::kHalfway,
                                             Position::kFirstElement, Position::kCenter};

std::string_view position_name(Position position);

/// Coordinate of the prediction on the unit zone [0,1).
double position_coordinate(Position position, double p);

/// Scores of a single point prediction at `position`. The expressions hold
/// for p in (0,1); at p = 1 the border and halfway positions coincide with the
/// event start, so the explicit construction scores those limits differently.
Scores single_position_scores(Position position, double p);

/// The explicit geometry behind the formulas: zone [0,1) and event
/// [1/2 - p/2, 1/2 + p/2).
AffiliationZone centered_zone(double p);

struct CurveRow {
  double p;
  Position position;
  double precision;
  double recall;
};

/// One row per (position, p), ordered by position and then by grid order.
std::vector<CurveRow> emit_curves(std::span<const double> grid);

/// p_k = k / points for k = 1..points.
std::vector<double> uniform_grid(std::size_t points);

}  // namespace affiliation::theory
