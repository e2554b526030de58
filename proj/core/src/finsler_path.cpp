#include "trispace/finsler_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "trispace/errors.hpp"
#include "trispace/triangle.hpp"
#include "trispace/triangle_space.hpp"

namespace trispace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Coords fd_velocity(const std::function<Coords(double)>& c, double t, double lo,
                   double hi, double step) {
  const double h = std::min(step, (hi - lo) / 4.0);
  Coords v;
  if (t - 2.0 * h >= lo && t + 2.0 * h <= hi) {
    const Coords m2 = c(t - 2.0 * h), m1 = c(t - h), p1 = c(t + h),
                 p2 = c(t + 2.0 * h);
    v.resize(p1.size());
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] = (m2[i] - 8.0 * m1[i] + 8.0 * p1[i] - p2[i]) / (12.0 * h);
    }
  } else if (t + 2.0 * h <= hi) {
    const Coords f0 = c(t), f1 = c(t + h), f2 = c(t + 2.0 * h);
    v.resize(f0.size());
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h);
    }
  } else {
    const Coords f0 = c(t), f1 = c(t - h), f2 = c(t - 2.0 * h);
    v.resize(f0.size());
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] = (3.0 * f0[i] - 4.0 * f1[i] + f2[i]) / (2.0 * h);
    }
  }
  return v;
}

struct SimpsonState {
  bool converged = true;
  double worst_interval = 0.0;
};

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol,
             int depth, SimpsonState& st) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    st.converged = false;
    st.worst_interval = std::max(st.worst_interval, std::abs(delta));
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, st) +
         adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, st);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth,
                        SimpsonState& st) {
  const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adapt(f, a, b, fa, fm, fb, whole, tol, max_depth, st);
}

}  // namespace

double path_length(const FinslerFn& F, const ParamPath& c, double tol,
                   const QuadratureOptions& opt) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("path_length: tol must be positive");
  }
  std::vector<double> cuts{0.0};
  for (double b : c.breakpoints) {
    if (!(b > cuts.back() && b < 1.0)) {
      throw std::invalid_argument(
          "path_length: breakpoints must be sorted inside (0,1)");
    }
    cuts.push_back(b);
  }
  cuts.push_back(1.0);

  double total = 0.0;
  SimpsonState st;
  const double seg_tol = tol / static_cast<double>(cuts.size() - 1);
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double lo = cuts[s], hi = cuts[s + 1];
    auto integrand = [&](double t) {
      return F(c.eval(t), fd_velocity(c.eval, t, lo, hi, opt.fd_step));
    };
    total += adaptive_simpson(integrand, lo, hi, seg_tol, opt.max_depth, st);
  }
  if (!st.converged) {
    throw numerical_error(
        "path_length: adaptive quadrature exhausted its depth budget "
        "(worst interval error " +
            std::to_string(st.worst_interval) + ")",
        total);
  }
  return total;
}

ParamPath as_param_path(const PathSpace& space, const DiscretePath& path) {
  if (path.K() < 2) {
    throw std::invalid_argument("as_param_path: need at least two waypoints");
  }
  const int segments = path.K() - 1;
  ParamPath out;
  out.eval = [space, path, segments](double t) {
    t = std::clamp(t, 0.0, 1.0);
    int s = std::min(static_cast<int>(t * segments), segments - 1);
    const double u = t * segments - s;
    return space.interpolate(path.waypoints[s], path.waypoints[s + 1], u);
  };
  for (int s = 1; s < segments; ++s) {
    out.breakpoints.push_back(static_cast<double>(s) / segments);
  }
  return out;
}

namespace {

// composite Simpson with analytic velocities over one segment
double segment_length(const PathSpace& space, const Coords& a, const Coords& b,
                      int panels) {
  auto g = [&](double u) {
    return space.norm(space.interpolate(a, b, u), space.velocity(a, b, u));
  };
  double acc = 0.0;
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double u0 = p * h, u1 = u0 + 0.5 * h, u2 = u0 + h;
    acc += h / 6.0 * (g(u0) + 4.0 * g(u1) + g(u2));
  }
  return acc;
}

double safe_segment_length(const PathSpace& space, const Coords& a,
                           const Coords& b, int panels) {
  try {
    const double v = segment_length(space, a, b, panels);
    return std::isfinite(v) ? v : kInf;
  } catch (const std::exception&) {
    return kInf;
  }
}

struct Working {
  std::vector<Coords> w;
  std::vector<double> seg;  // seg[i] = length of segment (w[i], w[i+1])

  double total() const {
    double t = 0.0;
    for (double s : seg) t += s;
    return t;
  }
};

Working measure(const PathSpace& space, std::vector<Coords> pts, int panels) {
  Working wk;
  wk.w = std::move(pts);
  wk.seg.resize(wk.w.size() - 1);
  for (size_t i = 0; i + 1 < wk.w.size(); ++i) {
    wk.seg[i] = safe_segment_length(space, wk.w[i], wk.w[i + 1], panels);
  }
  return wk;
}

// midpoint insertion into the currently longest segments until `target`
// waypoints; keeps every existing waypoint, so the curve is unchanged up
// to the interpolation rule
void refine_to(const PathSpace& space, Working& wk, int target, int panels) {
  while (static_cast<int>(wk.w.size()) < target) {
    size_t longest = 0;
    for (size_t i = 1; i < wk.seg.size(); ++i) {
      if (wk.seg[i] > wk.seg[longest]) longest = i;
    }
    Coords mid = space.interpolate(wk.w[longest], wk.w[longest + 1], 0.5);
    wk.w.insert(wk.w.begin() + longest + 1, mid);
    const double l0 =
        safe_segment_length(space, wk.w[longest], wk.w[longest + 1], panels);
    const double l1 = safe_segment_length(space, wk.w[longest + 1],
                                          wk.w[longest + 2], panels);
    wk.seg[longest] = l0;
    wk.seg.insert(wk.seg.begin() + longest + 1, l1);
  }
}

// golden-section search for the coordinate value minimizing the two
// segment lengths adjacent to waypoint i; returns true on improvement
bool improve_coordinate(const PathSpace& space, Working& wk, size_t i,
                        size_t dim, double radius, int panels, double tol) {
  const Coords original = wk.w[i];
  const double before = wk.seg[i - 1] + wk.seg[i];

  auto local = [&](double x) -> double {
    Coords cand = original;
    cand[dim] = x;
    try {
      cand = space.project(cand);
      if (!space.valid(cand)) return kInf;
    } catch (const std::exception&) {
      return kInf;
    }
    const double l0 = safe_segment_length(space, wk.w[i - 1], cand, panels);
    const double l1 = safe_segment_length(space, cand, wk.w[i + 1], panels);
    return l0 + l1;
  };

  const double x0 = original[dim];
  double lo = x0 - radius, hi = x0 + radius;
  constexpr double kPhi = 0.6180339887498949;
  double x1 = hi - kPhi * (hi - lo);
  double x2 = lo + kPhi * (hi - lo);
  double f1 = local(x1), f2 = local(x2);
  for (int it = 0; it < 24; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kPhi * (hi - lo);
      f1 = local(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kPhi * (hi - lo);
      f2 = local(x2);
    }
  }
  const double xbest = f1 <= f2 ? x1 : x2;
  const double fbest = std::min(f1, f2);
  if (fbest < before - tol) {
    Coords cand = original;
    cand[dim] = xbest;
    cand = space.project(cand);
    wk.w[i] = cand;
    wk.seg[i - 1] = safe_segment_length(space, wk.w[i - 1], cand, panels);
    wk.seg[i] = safe_segment_length(space, cand, wk.w[i + 1], panels);
    return true;
  }
  return false;
}

void descend(const PathSpace& space, Working& wk, const MinimizeOptions& opt) {
  if (wk.w.size() < 3) return;
  std::vector<std::size_t> dims = space.mutable_dims;
  if (dims.empty()) {
    dims.resize(wk.w[1].size());
    for (size_t d = 0; d < dims.size(); ++d) dims[d] = d;
  }
  double radius_scale = opt.initial_step;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    bool improved = false;
    for (size_t i = 1; i + 1 < wk.w.size(); ++i) {
      for (size_t d : dims) {
        const double scale = std::max(std::abs(wk.w[i][d]), 1e-3);
        improved |= improve_coordinate(space, wk, i, d, radius_scale * scale,
                                       opt.quad_panels, opt.tol * 1e-3);
      }
    }
    if (!improved) {
      radius_scale *= 0.5;  // no feasible or improving step at this scale
      if (radius_scale < 1e-10) break;
    }
  }
}

std::vector<Coords> default_init(const PathSpace& space, const Coords& X,
                                 const Coords& Y, int K) {
  std::vector<Coords> pts;
  pts.reserve(K);
  for (int i = 0; i < K; ++i) {
    const double t = static_cast<double>(i) / (K - 1);
    if (i == 0) {
      pts.push_back(X);
    } else if (i == K - 1) {
      pts.push_back(Y);
    } else {
      pts.push_back(space.interpolate(X, Y, t));
    }
  }
  return pts;
}

Coords default_jitter(const PathSpace& space, const Coords& c,
                      std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 0.05);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Coords out = c;
    for (double& x : out) x += n(rng) * std::max(std::abs(x), 1e-3);
    try {
      out = space.project(out);
      if (space.valid(out)) return out;
    } catch (const std::exception&) {
      // retry with a fresh draw
    }
  }
  return c;
}

}  // namespace

MinimizeResult minimize_length(const PathSpace& space, const Coords& X,
                               const Coords& Y, int K,
                               const MinimizeOptions& opt,
                               const std::optional<DiscretePath>& init) {
  if (K < 2) {
    throw std::invalid_argument("minimize_length: K must be >= 2");
  }
  if (opt.restarts < 1) {
    throw std::invalid_argument("minimize_length: need at least one restart");
  }

  std::vector<Coords> base;
  if (init) {
    if (init->K() < 2 || init->K() > K) {
      throw std::invalid_argument(
          "minimize_length: init must have between 2 and K waypoints");
    }
    base = init->waypoints;
    base.front() = X;
    base.back() = Y;
  } else {
    base = default_init(space, X, Y, std::min(K, 3));
  }

  MinimizeResult best;
  best.length = kInf;
  for (int r = 0; r < opt.restarts; ++r) {
    std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (r + 1)));
    std::vector<Coords> pts = base;
    if (r > 0) {
      for (size_t i = 1; i + 1 < pts.size(); ++i) {
        pts[i] = space.jitter ? space.jitter(pts[i], rng)
                              : default_jitter(space, pts[i], rng);
      }
    }
    Working wk = measure(space, std::move(pts), opt.quad_panels);
    // progressive refinement: optimize coarse, then subdivide and repeat
    while (true) {
      descend(space, wk, opt);
      if (static_cast<int>(wk.w.size()) >= K) break;
      const int next = std::min(K, 2 * static_cast<int>(wk.w.size()) - 1);
      refine_to(space, wk, next, opt.quad_panels);
    }
    const double len = wk.total();
    if (len < best.length) {
      best.length = len;
      best.path.waypoints = wk.w;
      best.best_restart = r;
    }
  }

  if (!std::isfinite(best.length)) {
    // no feasible configuration was found; report the untouched initial
    // path so the caller can inspect it
    Working wk = measure(space, default_init(space, X, Y, K), opt.quad_panels);
    best.path.waypoints = wk.w;
    best.length = wk.total();
    best.feasible = false;
  }
  return best;
}

PathSpace triangle_path_space() {
  PathSpace s;
  s.norm = [](const Coords& base, const Coords& v) {
    double best = -kInf;
    for (size_t i = 0; i < base.size(); ++i) {
      best = std::max(best, v[i] / base[i]);
    }
    return best;
  };
  s.interpolate = [](const Coords& a, const Coords& b, double u) {
    TriCoords g{std::pow(a[0], 1.0 - u) * std::pow(b[0], u),
                std::pow(a[1], 1.0 - u) * std::pow(b[1], u),
                std::pow(a[2], 1.0 - u) * std::pow(b[2], u)};
    const auto [n, lambda] = normalize_unit_area(g);
    return Coords{n.A1, n.A2, n.A3};
  };
  s.velocity = [](const Coords& a, const Coords& b, double u) {
    TriCoords g{std::pow(a[0], 1.0 - u) * std::pow(b[0], u),
                std::pow(a[1], 1.0 - u) * std::pow(b[1], u),
                std::pow(a[2], 1.0 - u) * std::pow(b[2], u)};
    const double r0 = std::log(b[0] / a[0]);
    const double r1 = std::log(b[1] / a[1]);
    const double r2 = std::log(b[2] / a[2]);
    const double area = heron_area(g);
    const double lambda = 1.0 / std::sqrt(area);
    // d/du of lambda(u) g(u): the area differential drives lambda
    const double dq =
        area_differential(g, g.A1 * r0, g.A2 * r1, g.A3 * r2);  // d(area^2)
    const double darea = dq / (2.0 * area);
    const double dlambda = -0.5 * lambda / area * darea;
    return Coords{dlambda * g.A1 + lambda * g.A1 * r0,
                  dlambda * g.A2 + lambda * g.A2 * r1,
                  dlambda * g.A3 + lambda * g.A3 * r2};
  };
  s.project = [](const Coords& c) {
    TriCoords g{c[0], c[1], c[2]};
    const auto [n, lambda] = normalize_unit_area(g);
    return Coords{n.A1, n.A2, n.A3};
  };
  s.valid = [](const Coords& c) {
    return c.size() == 3 && c[0] > 0.0 && c[1] > 0.0 && c[2] > 0.0;
  };
  s.jitter = [](const Coords& c, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 0.1);
    TriCoords g{c[0] * std::exp(n(rng)), c[1] * std::exp(n(rng)),
                c[2] * std::exp(n(rng))};
    const auto [nn, lambda] = normalize_unit_area(g);
    return Coords{nn.A1, nn.A2, nn.A3};
  };
  return s;
}

}  // namespace trispace
