#pragma once

#include <array>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "trispace/triangle.hpp"
#include "trispace/triangle_space.hpp"

namespace trispace {

// Combinatorial triangulation of a compact surface: numbered edges and
// ordered edge-index triples as faces. An edge may appear once (boundary),
// twice across faces (interior) or twice on one face (double edge); more
// than twice is rejected. The orientation index set pairs each face with
// the even permutations of its triple.
class Triangulation {
 public:
  struct EdgeUse {
    int face = 0;
    int slot = 0;  // position of the edge inside the face triple
  };

  static std::shared_ptr<const Triangulation> build(
      int edge_count, std::vector<std::array<int, 3>> faces);

  int edge_count() const { return edge_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }
  const std::vector<EdgeUse>& uses(int edge) const { return uses_[edge]; }
  bool is_boundary(int edge) const { return uses_[edge].size() == 1; }
  const std::vector<int>& interior_edges() const { return interior_; }

  // The even-permutation index set: per face f with triple (i,j,k), the
  // members (i,j,k), (j,k,i), (k,i,j), listed in slot order. Slot s of
  // face f stores the coordinate whose leading index is faces()[f][s].
  std::vector<std::array<int, 3>> index_set() const;

 private:
  Triangulation() = default;
  int edge_count_ = 0;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::vector<EdgeUse>> uses_;
  std::vector<int> interior_;
};

// A singular-flat structure on the triangulated surface: one positive
// half-sum coordinate per (face, opposite-edge) slot, satisfying the
// interior-edge gluing constraints. Slot s of face (i,j,k) holds
// (l_j + l_k - l_i)/2 for the edge triple rotated to start at position s.
class SurfacePoint {
 public:
  // Validates positivity and the gluing constraints (relative tolerance
  // `tol` on each interior edge length). Throws constraint_error on a
  // gluing mismatch, std::domain_error on non-positive slots.
  static SurfacePoint from_slots(std::shared_ptr<const Triangulation> tri,
                                 std::vector<std::array<double, 3>> slots,
                                 double tol = 1e-12);
  // Builds slots from per-edge lengths; the constraints hold by
  // construction. Throws std::domain_error if a face violates a strict
  // triangle inequality.
  static SurfacePoint from_edge_lengths(
      std::shared_ptr<const Triangulation> tri, std::span<const double> l);

  const Triangulation& tri() const { return *tri_; }
  const std::shared_ptr<const Triangulation>& tri_ptr() const { return tri_; }
  double slot(int face, int s) const { return slots_[face][s]; }
  const std::vector<std::array<double, 3>>& slots() const { return slots_; }
  double area() const { return area_; }

  TriCoords face_coords(int face) const {
    return TriCoords::from_array(slots_[face]);
  }

  // l_e, derived from any adjacent face (consistent by the constraints).
  std::vector<double> edge_lengths() const;

  // Largest relative disagreement of the two face-side values over the
  // interior edges; ~machine epsilon for points built by the constructors.
  double constraint_residual() const;

  std::vector<double> flat() const;  // slots in (face, slot) order

 private:
  SurfacePoint(std::shared_ptr<const Triangulation> tri,
               std::vector<std::array<double, 3>> slots);
  std::shared_ptr<const Triangulation> tri_;
  std::vector<std::array<double, 3>> slots_;
  double area_ = 0.0;
};

double surface_area(const SurfacePoint& p);
std::pair<SurfacePoint, double> normalize_unit_area(const SurfacePoint& p);

// log of the maximal slot ratio over the whole index set. Requires both
// points to live on the same triangulation (std::invalid_argument
// otherwise). On a single-face surface this is exactly eta.
double eta_T(const SurfacePoint& p, const SurfacePoint& q);

// (1-t) eta_T(p,q) + t eta_T(q,p)  /  max{(1-t) eta_T(p,q), t eta_T(q,p)}.
double eta_T_family_arith(double t, const SurfacePoint& p,
                          const SurfacePoint& q);
double eta_T_family_max(double t, const SurfacePoint& p,
                        const SurfacePoint& q);

// Slot-wise log-linear interpolation rescaled to unit area. The ambient
// interpolation does not satisfy the gluing constraints exactly away from
// the endpoints, so each sample is projected back onto the constraint set:
// the edge lengths implied by the two face sides are averaged and the
// slots rebuilt from them. The size of that projection is reported per
// sample; evaluation refuses (numerical_error) when it exceeds the
// configured budget, so the discrepancy is observable rather than hidden.
class SurfaceGeodesic {
 public:
  SurfaceGeodesic(SurfacePoint start, SurfacePoint end,
                  double projection_budget);

  const SurfacePoint& start() const { return start_; }
  const SurfacePoint& end() const { return end_; }

  // Projected, unit-area sample; throws numerical_error if the projection
  // moved any slot by more than the budget (in log scale), domain_error if
  // the projected slots are not positive.
  SurfacePoint operator()(double t) const;

  // max_i |log(projected_i / interpolated_i)| at parameter t.
  double projection_residual(double t) const;

  // The unprojected unit-area interpolation (flat slot order). Exactly the
  // log-linear construction; additivity of eta_T holds along it to
  // round-off, but its samples may violate the gluing constraints.
  std::vector<double> ambient(double t) const;

 private:
  std::vector<double> interpolate(double t) const;
  SurfacePoint project(double t, double& residual) const;
  SurfacePoint start_;
  SurfacePoint end_;
  double budget_;
};

SurfaceGeodesic geodesic_T(const SurfacePoint& p, const SurfacePoint& q,
                           double projection_budget = 1e-9);

// Dominance criterion for sampled paths in slot coordinates
// (pre-normalization, flat (face, slot) order): geodesic iff some slot's
// log-increments dominate all others over every sampled parameter pair.
GeodesicCheck verify_geodesic_T(
    std::span<const std::pair<double, std::vector<double>>> samples,
    int slot_count, double slack = 1e-10);

// Tangent at a surface point: one value per slot, respecting the
// linearized gluing constraints and the vanishing of the area
// differential.
struct SurfaceTangent {
  SurfacePoint base;
  std::vector<std::array<double, 3>> v;
};

// Relative residuals of the two tangency conditions.
double tangent_constraint_residual(const SurfaceTangent& t);
double tangent_area_residual(const SurfaceTangent& t);

// max over slots of v / A; a weak norm on each tangent space. Vectors
// violating either tangency condition beyond `band` are rejected with
// std::invalid_argument.
double finsler_T(const SurfaceTangent& v, double band = 1e-8);
double finsler_T_family(double t, const SurfaceTangent& v, double band = 1e-8);

// The disc triangulated by two faces sharing edge 0 (the diagonal);
// edges 1..4 are boundary. Face triples: (0,1,2) and (0,3,4).
std::shared_ptr<const Triangulation> two_face_disc();

// Degenerating pair of unit-area quadrangle structures on two_face_disc():
// the first quadrangle has boundary sides a(n)/c(n), a(n)/c(n), 2/c(n),
// 2/c(n) and diagonal 2/c(n) with c(n) = sqrt(sqrt(3) + 1/n),
// a(n) = sqrt(1 + 1/n^2); the second uses b(n) = sqrt(1 + 4/n^2),
// d(n) = sqrt(sqrt(3) + 2/n). As n grows the pair witnesses the failure of
// convergence-symmetry and of forward completeness: eta_T(Q, Q') tends to
// log 4 while eta_T(Q', Q) tends to 0, and the thin face of Q degenerates.
std::pair<SurfacePoint, SurfacePoint> incomplete_example_pair(long n);

}  // namespace trispace
