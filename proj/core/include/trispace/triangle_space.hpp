#pragma once

#include <span>
#include <utility>
#include <vector>

#include "trispace/triangle.hpp"

namespace trispace {

// A point of the space of marked unit-area triangles: half-sum
// coordinates with Heron area 1 within 1e-12.
struct TrianglePoint {
  TriCoords coords;

  // Throws std::domain_error unless |heron_area - 1| <= 1e-12.
  static TrianglePoint from_coords(const TriCoords& c);
  // Rescales to unit area first; always succeeds on valid coordinates.
  static TrianglePoint normalized(const TriCoords& c);

  std::array<double, 3> to_array() const { return coords.to_array(); }
};

// Tangent vector at a unit-area point. Tangency means the differential of
// the area constraint vanishes; callers typically produce such vectors by
// finite differencing, so a tolerance band applies at the use sites.
struct TangentVector {
  TrianglePoint base;
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;

  std::array<double, 3> to_array() const { return {v1, v2, v3}; }
};

// Value of the differential of A1 A2 A3 (A1+A2+A3) at `c` applied to v:
//   (2 A1A2A3 + A2A3(A2+A3)) v1 + (2 A1A2A3 + A1A3(A1+A3)) v2
// + (2 A1A2A3 + A1A2(A1+A2)) v3.
double area_differential(const TriCoords& c, double v1, double v2, double v3);

// |area_differential| scaled by the sum of the term magnitudes; 0 for the
// zero vector.
double tangency_residual(const TangentVector& v);

// The asymmetric distance: max_i (log Y_i - log X_i). Defined on the whole
// open octant; restricted to unit-area points it is nonnegative and
// separates points.
double eta(const TriCoords& X, const TriCoords& Y);
std::pair<double, int> eta_argmax(const TriCoords& X, const TriCoords& Y);

// (1-t) eta(X,Y) + t eta(Y,X), for t in [0,1].
double eta_family_arith(double t, const TrianglePoint& X,
                        const TrianglePoint& Y);
// max{(1-t) eta(X,Y), t eta(Y,X)}, for t in [0,1].
double eta_family_max(double t, const TrianglePoint& X, const TrianglePoint& Y);

// max{eta(X,Y), eta(Y,X)}; on unit-area points this equals
// max_i |log Y_i - log X_i| bit-for-bit (both sides are assembled from the
// same log differences).
double d_max(const TrianglePoint& X, const TrianglePoint& Y);

// The log-linear bigeodesic: t -> unit-area rescaling of the coordinatewise
// interpolation X_i^(1-t) Y_i^t. Geodesic in both traversal directions.
struct GeodesicPath {
  TrianglePoint start;
  TrianglePoint end;

  TrianglePoint operator()(double t) const;
};

GeodesicPath geodesic(const TrianglePoint& X, const TrianglePoint& Y);

// One failed dominance comparison: coordinate `i` out-grew candidate `j`
// between parameters t_lo < t_hi.
struct DominanceWitness {
  int i = 0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  int candidate = 0;
};

struct GeodesicCheck {
  bool ok = false;
  // smallest index whose log-increments dominate all others (valid if ok)
  int dominating_index = -1;
  // one witness per failed candidate index (empty if ok)
  std::vector<DominanceWitness> witnesses;
};

// Checks the dominance criterion on a sampled path given by
// pre-normalization coordinates: the (rescaled) path is a geodesic iff some
// index j satisfies log A_i(t') - log A_i(t) <= log A_j(t') - log A_j(t)
// for every i and every sampled t <= t'. Grid evidence only; the report
// carries the samples actually compared.
GeodesicCheck verify_geodesic(
    std::span<const std::pair<double, TriCoords>> samples,
    double slack = 1e-10);

// The weak norm max_i v_i / A_i of a tangent vector. Nonnegative and zero
// only at the zero vector; this depends on the tangency constraint, so
// vectors with tangency_residual beyond `tangency_band` are rejected with
// std::invalid_argument.
double finsler_norm(const TangentVector& v, double tangency_band = 1e-8);

// (1-t) max_i{v_i/A_i} + t max_i{-v_i/A_i}, t in [0,1].
double finsler_family_arith(double t, const TangentVector& v,
                            double tangency_band = 1e-8);

}  // namespace trispace
