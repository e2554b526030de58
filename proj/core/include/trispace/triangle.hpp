#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace trispace {

// Euclidean edge lengths of a triangle. Valid iff the three strict
// triangle inequalities hold.
struct EdgeLengths {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  std::array<double, 3> to_array() const { return {a1, a2, a3}; }
};

// Half-sum coordinates A_i = (a_j + a_k - a_i) / 2. A triple of edge
// lengths satisfies the triangle inequalities exactly when all three
// coordinates are strictly positive, so the coordinate domain is the
// full open octant.
struct TriCoords {
  double A1 = 0.0;
  double A2 = 0.0;
  double A3 = 0.0;

  std::array<double, 3> to_array() const { return {A1, A2, A3}; }
  static TriCoords from_array(const std::array<double, 3>& a) {
    return {a[0], a[1], a[2]};
  }
};

// Axis-aligned box with one corner at the origin, any dimension >= 1.
struct BoxDims {
  std::vector<double> lengths;
};

// Throws std::domain_error unless all coordinates are strictly positive
// (and finite).
void validate(const TriCoords& c);
void validate(const EdgeLengths& e);

// sqrt((A1+A2+A3) A1 A2 A3). Homogeneous of degree 2.
double heron_area(const TriCoords& c);

TriCoords edges_to_coords(const EdgeLengths& e);
EdgeLengths coords_to_edges(const TriCoords& c);

// Returns (lambda * c, lambda) with heron_area(lambda * c) == 1,
// lambda = heron_area(c)^(-1/2).
std::pair<TriCoords, double> normalize_unit_area(const TriCoords& c);

// Log of the best Lipschitz constant over label-preserving homeomorphisms
// between two boxes of equal dimension: max_i(log dst_i - log src_i).
// The optimum is attained by the coordinate-wise affine map.
double box_lipschitz(const BoxDims& src, const BoxDims& dst);

// max_i (log y_i - log x_i), the primitive behind every log-max-ratio
// metric in this library. All call sites share this routine so that
// identities between the metrics hold bit-for-bit.
double max_log_ratio(std::span<const double> x, std::span<const double> y);

// Same value plus the maximizing index; ties resolve to the smallest index.
std::pair<double, int> max_log_ratio_argmax(std::span<const double> x,
                                            std::span<const double> y);

// min A_i / max A_i < 1e-12. Such inputs are accepted (the coordinates are
// still strictly positive) but results computed from them deserve a
// conditioning warning in any report.
bool ill_conditioned(const TriCoords& c);

}  // namespace trispace
