#pragma once

#include <array>
#include <utility>

#include "trispace/triangle.hpp"

namespace trispace {

// First-quadrant chart of the unit-area triangle space: a point keeps the
// first two half-sum coordinates, the third is recovered by g_third.
struct QuadrantPoint {
  double A1 = 0.0;
  double A2 = 0.0;
};

void validate(const QuadrantPoint& p);

// The unique positive A3 with heron_area(A1, A2, A3) == 1:
//   (sqrt((A1+A2)^2 + 4/(A1 A2)) - A1 - A2) / 2.
double g_third_coordinate(const QuadrantPoint& p);

// Closed-form partial derivatives of g_third; both strictly negative
// everywhere on the open quadrant.
std::pair<double, double> g_partials(const QuadrantPoint& p);

// (A1, A2, g_third(p)) — the chart map into unit-area coordinates.
TriCoords lift(const QuadrantPoint& p);

// Transported distance: max of the three log ratios including the
// recovered third coordinate. Computed with the same primitive as eta, so
// eta_star(p, q) == eta(lift(p), lift(q)) holds bit-for-bit.
double eta_star(const QuadrantPoint& p, const QuadrantPoint& q);

// Transported weak norm at p applied to the chart direction (x, y):
//   max{x/A1, y/A2, (x dG/dA1 + y dG/dA2) / G}.
// The chart absorbs the area constraint, so (x, y) is unconstrained.
double finsler_star(const QuadrantPoint& p, double x, double y);

// Unit ball of the transported norm in the tangent plane at p: a right
// triangle with the right angle at U.
struct UnitBallTriangle {
  std::array<double, 2> U;
  std::array<double, 2> V;
  std::array<double, 2> W;
};

UnitBallTriangle unit_ball(const QuadrantPoint& p);

}  // namespace trispace
