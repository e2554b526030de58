#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "trispace/finsler_path.hpp"
#include "trispace/surface.hpp"

namespace trispace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

// A unit-area strictly convex n-gon with marked vertices in
// counterclockwise order, held in canonical pose: vertex 0 at the origin,
// vertex 1 on the positive x-axis. The pose quotients out rigid motions;
// reflections are not quotiented.
class PolygonShape {
 public:
  // Canonicalizes the pose. With `rescale_area` the vertices are scaled to
  // unit area, otherwise the area must already be 1 within 1e-12. If
  // `adjustment` is given it receives the largest vertex displacement the
  // normalization applied (useful for input-sanitation warnings). Throws
  // not_convex_error when the polygon is not strictly convex ccw,
  // std::domain_error on other invalid input.
  static PolygonShape from_vertices(std::vector<Vec2> v,
                                    bool rescale_area = false,
                                    double* adjustment = nullptr);
  static PolygonShape from_flat(std::span<const double> coords,
                                bool rescale_area = false);

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<Vec2>& vertices() const { return v_; }
  std::vector<double> flat() const;

 private:
  explicit PolygonShape(std::vector<Vec2> v) : v_(std::move(v)) {}
  std::vector<Vec2> v_;
};

double polygon_area(std::span<const Vec2> v);  // shoelace, signed

// One triangulation of the marked disc: n-3 pairwise non-crossing
// diagonals plus the induced edge complex. Edge ids: 0..n-1 are the
// boundary edges (i joins vertex i to i+1 mod n), then the diagonals in
// lexicographic order.
struct PolygonTriangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;
  std::vector<std::array<int, 3>> face_vertices;  // ccw vertex triples
  std::vector<std::pair<int, int>> edge_endpoints;
  std::shared_ptr<const Triangulation> complex;
};

// All triangulations of the convex n-gon, Catalan(n-2) of them, in a
// deterministic order. Cached per n; 3 <= n <= 12.
const std::vector<PolygonTriangulation>& enumerate_triangulations(int n);

// Edge lengths of the development of `shape` in the chart of `tri`,
// assembled into a surface point (the gluing constraints hold by
// construction).
SurfacePoint chart_coords(const PolygonShape& shape,
                          const PolygonTriangulation& tri);

// Inverse chart: develops the faces over the dual tree of the
// triangulation, canonicalizes the pose and validates convexity
// (not_convex_error when the point lies outside the convex locus) and
// unit area (constraint_error beyond 1e-10).
PolygonShape shape_from_chart(const SurfacePoint& p,
                              const PolygonTriangulation& tri);

// max / arithmetic mean over all triangulation charts of the per-chart
// asymmetric distance.
double eta_sup(const PolygonShape& X, const PolygonShape& Y);
double eta_avg(const PolygonShape& X, const PolygonShape& Y);

// Variation of the development vertices with the pose gauge fixed:
// d[0] = (0,0) and d[1].y = 0. Must preserve area to first order.
struct ShapeTangent {
  std::vector<Vec2> d;
};

// Pushes the tangent into every chart through the differentials of the
// edge-length functions and combines the per-chart weak norms by max /
// mean. The tangent must preserve area to first order within 1e-8
// (std::invalid_argument otherwise); the remaining area component is
// projected out exactly before evaluation.
double finsler_sup(const PolygonShape& X, const ShapeTangent& v);
double finsler_avg(const PolygonShape& X, const ShapeTangent& v);

enum class ChartCombine { sup, avg };

// The space of unit-area convex n-gons as a PathSpace: straight-line
// vertex interpolation rescaled to unit area, norm finsler_sup or
// finsler_avg.
PathSpace polygon_path_space(int n, ChartCombine which);

// Upper bound on the path metric induced by the combined Finsler
// structure: discrete length minimization seeded with the straight-line
// path and with the developed per-chart geodesics. Deterministic given
// the seed.
double path_metric_upper(const PolygonShape& X, const PolygonShape& Y,
                         ChartCombine which, int K, int restarts,
                         std::uint64_t seed = 0,
                         const MinimizeOptions* tuning = nullptr);

// Random strictly convex unit-area n-gon: sorted random angles on a
// random-aspect ellipse, rejecting polygons with an interior angle within
// 1e-3 of pi.
PolygonShape random_convex_polygon(int n, std::mt19937_64& rng);

}  // namespace trispace
