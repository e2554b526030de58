#include "trispace/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace trispace {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void validate(const TriCoords& c) {
  if (!positive_finite(c.A1) || !positive_finite(c.A2) ||
      !positive_finite(c.A3)) {
    throw std::domain_error(
        "triangle coordinates must be strictly positive and finite");
  }
}

void validate(const EdgeLengths& e) {
  if (!positive_finite(e.a1) || !positive_finite(e.a2) ||
      !positive_finite(e.a3)) {
    throw std::domain_error("edge lengths must be strictly positive");
  }
  if (e.a1 >= e.a2 + e.a3 || e.a2 >= e.a3 + e.a1 || e.a3 >= e.a1 + e.a2) {
    throw std::domain_error("edge lengths violate a strict triangle inequality");
  }
}

double heron_area(const TriCoords& c) {
  validate(c);
  return std::sqrt((c.A1 + c.A2 + c.A3) * c.A1 * c.A2 * c.A3);
}

TriCoords edges_to_coords(const EdgeLengths& e) {
  validate(e);
  return {(e.a2 + e.a3 - e.a1) / 2.0, (e.a3 + e.a1 - e.a2) / 2.0,
          (e.a1 + e.a2 - e.a3) / 2.0};
}

EdgeLengths coords_to_edges(const TriCoords& c) {
  validate(c);
  return {c.A2 + c.A3, c.A3 + c.A1, c.A1 + c.A2};
}

std::pair<TriCoords, double> normalize_unit_area(const TriCoords& c) {
  const double lambda = 1.0 / std::sqrt(heron_area(c));
  return {{lambda * c.A1, lambda * c.A2, lambda * c.A3}, lambda};
}

double max_log_ratio(std::span<const double> x, std::span<const double> y) {
  return max_log_ratio_argmax(x, y).first;
}

std::pair<double, int> max_log_ratio_argmax(std::span<const double> x,
                                            std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("max_log_ratio: size mismatch or empty input");
  }
  double best = -std::numeric_limits<double>::infinity();
  int arg = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!positive_finite(x[i]) || !positive_finite(y[i])) {
      throw std::domain_error("max_log_ratio: entries must be positive");
    }
    const double d = std::log(y[i]) - std::log(x[i]);
    if (d > best) {
      best = d;
      arg = static_cast<int>(i);
    }
  }
  return {best, arg};
}

double box_lipschitz(const BoxDims& src, const BoxDims& dst) {
  if (src.lengths.size() != dst.lengths.size() || src.lengths.empty()) {
    throw std::invalid_argument(
        "box_lipschitz: boxes must share a dimension n >= 1");
  }
  return max_log_ratio(src.lengths, dst.lengths);
}

bool ill_conditioned(const TriCoords& c) {
  const auto a = c.to_array();
  const double lo = *std::min_element(a.begin(), a.end());
  const double hi = *std::max_element(a.begin(), a.end());
  return lo < 1e-12 * hi;
}

}  // namespace trispace
