#include "trispace/quadrant.hpp"

#include <cmath>
#include <stdexcept>

namespace trispace {

void validate(const QuadrantPoint& p) {
  if (!(std::isfinite(p.A1) && p.A1 > 0.0 && std::isfinite(p.A2) &&
        p.A2 > 0.0)) {
    throw std::domain_error("quadrant point must have positive coordinates");
  }
}

double g_third_coordinate(const QuadrantPoint& p) {
  validate(p);
  const double s = p.A1 + p.A2;
  return (std::sqrt(s * s + 4.0 / (p.A1 * p.A2)) - s) / 2.0;
}

std::pair<double, double> g_partials(const QuadrantPoint& p) {
  validate(p);
  const double s = p.A1 + p.A2;
  const double root = std::sqrt(s * s + 4.0 / (p.A1 * p.A2));
  const double d1 = ((s - 2.0 / (p.A1 * p.A1 * p.A2)) / root - 1.0) / 2.0;
  const double d2 = ((s - 2.0 / (p.A2 * p.A2 * p.A1)) / root - 1.0) / 2.0;
  return {d1, d2};
}

TriCoords lift(const QuadrantPoint& p) {
  return {p.A1, p.A2, g_third_coordinate(p)};
}

double eta_star(const QuadrantPoint& p, const QuadrantPoint& q) {
  const std::array<double, 3> x{p.A1, p.A2, g_third_coordinate(p)};
  const std::array<double, 3> y{q.A1, q.A2, g_third_coordinate(q)};
  return max_log_ratio(x, y);
}

double finsler_star(const QuadrantPoint& p, double x, double y) {
  validate(p);
  const double g = g_third_coordinate(p);
  const auto [d1, d2] = g_partials(p);
  const double third = (x * d1 + y * d2) / g;
  return std::max({x / p.A1, y / p.A2, third});
}

UnitBallTriangle unit_ball(const QuadrantPoint& p) {
  validate(p);
  const double g = g_third_coordinate(p);
  const auto [d1, d2] = g_partials(p);
  UnitBallTriangle ball;
  ball.U = {p.A1, p.A2};
  ball.V = {(g - p.A2 * d2) / d1, p.A2};
  ball.W = {p.A1, (g - p.A1 * d1) / d2};
  return ball;
}

}  // namespace trispace
