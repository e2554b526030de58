#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace trispace {

// Generic coordinate vector: half-sum slots for triangle/surface charts,
// flattened vertex positions for polygon shapes.
using Coords = std::vector<double>;

// Finsler evaluator: weak norm of `velocity` in the tangent space at
// `base`. Throws on invalid base points.
using FinslerFn = std::function<double(const Coords& base,
                                       const Coords& velocity)>;

// A parametrized path on [0,1]; `breakpoints` lists interior parameters
// where the path is allowed to be non-smooth, sorted ascending.
struct ParamPath {
  std::function<Coords(double)> eval;
  std::vector<double> breakpoints;
};

struct QuadratureOptions {
  int max_depth = 30;
  double fd_step = 1e-5;  // finite-difference step in parameter units
};

// Length of the path under F by adaptive Simpson quadrature of
// F(c(t), c'(t)), with velocities by finite differences (fourth-order
// stencil away from breakpoints). The absolute error estimate is kept
// below `tol`; if the depth budget runs out first, numerical_error is
// thrown carrying the partial estimate.
double path_length(const FinslerFn& F, const ParamPath& c, double tol,
                   const QuadratureOptions& opt = {});

// One space the discrete optimizer can move through. `interpolate` is the
// per-segment rule (log-linear for coordinate charts, straight-line with
// unit-area rescaling for polygon developments); `project` snaps a
// perturbed waypoint back to the space; `valid` guards the admissible
// region. `velocity` returns the analytic derivative of
// interpolate(a, b, .) at u.
struct PathSpace {
  FinslerFn norm;
  std::function<Coords(const Coords&, const Coords&, double)> interpolate;
  std::function<Coords(const Coords&, const Coords&, double)> velocity;
  std::function<Coords(const Coords&)> project;
  std::function<bool(const Coords&)> valid;
  // optional; a multiplicative coordinate jitter is used when absent
  std::function<Coords(const Coords&, std::mt19937_64&)> jitter;
  // coordinates the optimizer may vary; empty means all of them (gauge
  // coordinates of a canonical pose go here)
  std::vector<std::size_t> mutable_dims;
};

// Piecewise path through K waypoints; consecutive waypoints are joined by
// the owning space's interpolation rule over a uniform parameter grid.
struct DiscretePath {
  std::vector<Coords> waypoints;

  int K() const { return static_cast<int>(waypoints.size()); }
};

// Wraps a discrete path as a ParamPath over the given space.
ParamPath as_param_path(const PathSpace& space, const DiscretePath& path);

struct MinimizeOptions {
  int restarts = 1;
  std::uint64_t seed = 0;
  int max_sweeps = 40;
  double tol = 1e-9;       // improvement threshold / refinement slack
  int quad_panels = 16;    // Simpson panels per segment for the objective
  double initial_step = 0.25;  // line-search radius, relative
};

struct MinimizeResult {
  DiscretePath path;
  double length = 0.0;
  bool feasible = true;   // false when no feasible step existed
  int best_restart = 0;
};

// Upper-bounds the path-length infimum between X and Y by cyclic
// coordinate descent (golden-section line search per waypoint coordinate)
// over the interior waypoints of a K-point discrete path, with seeded
// multi-restart. Infeasible steps are rejected and the search radius
// shrinks. Deterministic given (inputs, seed). `init` warm-starts the
// search (it is refined to K waypoints by inserting segment midpoints);
// by default the space's own interpolation of X to Y is used.
MinimizeResult minimize_length(const PathSpace& space, const Coords& X,
                               const Coords& Y, int K,
                               const MinimizeOptions& opt = {},
                               const std::optional<DiscretePath>& init = {});

// The unit-area triangle chart as a PathSpace (log-linear segments,
// norm max_i v_i / A_i).
PathSpace triangle_path_space();

}  // namespace trispace
