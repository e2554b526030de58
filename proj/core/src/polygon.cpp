#include "trispace/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "trispace/errors.hpp"

namespace trispace {

namespace {

constexpr double kConvexityFloor = 1e-12;

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

double dist(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void check_convex_ccw(std::span<const Vec2> v) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Vec2 e0 = sub(v[(i + 1) % n], v[i]);
    const Vec2 e1 = sub(v[(i + 2) % n], v[(i + 1) % n]);
    if (!(cross(e0, e1) > kConvexityFloor)) {
      throw not_convex_error(
          "polygon is not strictly convex counterclockwise (turn " +
          std::to_string(cross(e0, e1)) + " at vertex " +
          std::to_string((i + 1) % n) + ")");
    }
  }
}

std::vector<Vec2> canonical_pose(std::vector<Vec2> v, double* adjustment) {
  const std::vector<Vec2> before = v;
  const Vec2 origin = v[0];
  for (auto& p : v) p = sub(p, origin);
  const double len = std::hypot(v[1].x, v[1].y);
  if (!(len > 0.0)) {
    throw std::domain_error("polygon has coincident first two vertices");
  }
  const double c = v[1].x / len, s = v[1].y / len;
  for (auto& p : v) {
    p = {c * p.x + s * p.y, -s * p.x + c * p.y};
  }
  v[0] = {0.0, 0.0};
  v[1].y = 0.0;
  if (adjustment) {
    double worst = 0.0;
    for (size_t i = 0; i < v.size(); ++i) {
      worst = std::max(worst, dist(v[i], before[i]));
    }
    *adjustment = std::max(*adjustment, worst);
  }
  return v;
}

}  // namespace

double polygon_area(std::span<const Vec2> v) {
  double acc = 0.0;
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    acc += cross(v[i], v[(i + 1) % n]);
  }
  return acc / 2.0;
}

PolygonShape PolygonShape::from_vertices(std::vector<Vec2> v,
                                         bool rescale_area,
                                         double* adjustment) {
  if (v.size() < 3) {
    throw std::domain_error("polygon needs at least three vertices");
  }
  for (const auto& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::domain_error("polygon vertices must be finite");
    }
  }
  if (adjustment) *adjustment = 0.0;
  v = canonical_pose(std::move(v), adjustment);
  const double area = polygon_area(v);
  if (!(area > 0.0)) {
    throw not_convex_error("polygon vertices are not in ccw order");
  }
  if (rescale_area) {
    const std::vector<Vec2> before = v;
    const double scale = 1.0 / std::sqrt(area);
    for (auto& p : v) {
      p.x *= scale;
      p.y *= scale;
    }
    if (adjustment) {
      double worst = 0.0;
      for (size_t i = 0; i < v.size(); ++i) {
        worst = std::max(worst, dist(v[i], before[i]));
      }
      *adjustment = std::max(*adjustment, worst);
    }
  } else if (std::abs(area - 1.0) > 1e-12) {
    throw std::domain_error("polygon area is not 1 (got " +
                            std::to_string(area) + ")");
  }
  check_convex_ccw(v);
  return PolygonShape(std::move(v));
}

PolygonShape PolygonShape::from_flat(std::span<const double> coords,
                                     bool rescale_area) {
  if (coords.size() < 6 || coords.size() % 2 != 0) {
    throw std::domain_error("polygon coordinate list must hold n >= 3 pairs");
  }
  std::vector<Vec2> v(coords.size() / 2);
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = {coords[2 * i], coords[2 * i + 1]};
  }
  return from_vertices(std::move(v), rescale_area);
}

std::vector<double> PolygonShape::flat() const {
  std::vector<double> out;
  out.reserve(2 * v_.size());
  for (const auto& p : v_) {
    out.push_back(p.x);
    out.push_back(p.y);
  }
  return out;
}

namespace {

using FaceList = std::vector<std::array<int, 3>>;

// every triangulation of the vertex interval [lo, hi] with the chord
// (lo, hi) as an edge; apex chosen in ascending order
std::vector<FaceList> triangulate_interval(int lo, int hi) {
  if (hi - lo < 2) return {FaceList{}};
  std::vector<FaceList> out;
  for (int k = lo + 1; k < hi; ++k) {
    const auto left = triangulate_interval(lo, k);
    const auto right = triangulate_interval(k, hi);
    for (const auto& L : left) {
      for (const auto& R : right) {
        FaceList faces;
        faces.reserve(L.size() + R.size() + 1);
        faces.insert(faces.end(), L.begin(), L.end());
        faces.push_back({lo, k, hi});
        faces.insert(faces.end(), R.begin(), R.end());
        out.push_back(std::move(faces));
      }
    }
  }
  return out;
}

PolygonTriangulation assemble(int n, const FaceList& faces) {
  PolygonTriangulation t;
  t.n = n;
  t.face_vertices = faces;

  auto normalized = [](int a, int b) {
    return a < b ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a};
  };
  auto is_boundary = [n](const std::pair<int, int>& e) {
    return e.second == e.first + 1 || (e.first == 0 && e.second == n - 1);
  };

  std::map<std::pair<int, int>, int> ids;
  for (int i = 0; i < n; ++i) {
    t.edge_endpoints.push_back({i, (i + 1) % n});
    ids[normalized(i, (i + 1) % n)] = i;
  }
  for (const auto& f : faces) {
    for (int s = 0; s < 3; ++s) {
      const auto e = normalized(f[s], f[(s + 1) % 3]);
      if (!is_boundary(e) && !ids.count(e)) {
        t.diagonals.push_back(e);
      }
    }
  }
  std::sort(t.diagonals.begin(), t.diagonals.end());
  for (const auto& d : t.diagonals) {
    ids[d] = static_cast<int>(t.edge_endpoints.size());
    t.edge_endpoints.push_back(d);
  }

  std::vector<std::array<int, 3>> edge_triples;
  edge_triples.reserve(faces.size());
  for (const auto& f : faces) {
    // slot 0 opposite vertex f[0], etc.
    edge_triples.push_back({ids.at(normalized(f[1], f[2])),
                            ids.at(normalized(f[2], f[0])),
                            ids.at(normalized(f[0], f[1]))});
  }
  t.complex = Triangulation::build(static_cast<int>(t.edge_endpoints.size()),
                                   std::move(edge_triples));
  return t;
}

}  // namespace

const std::vector<PolygonTriangulation>& enumerate_triangulations(int n) {
  if (n < 3 || n > 12) {
    throw std::invalid_argument(
        "enumerate_triangulations: n must lie in [3, 12]");
  }
  static std::mutex mu;
  static std::map<int, std::vector<PolygonTriangulation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<PolygonTriangulation> all;
    for (const auto& faces : triangulate_interval(0, n - 1)) {
      all.push_back(assemble(n, faces));
    }
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

SurfacePoint chart_coords(const PolygonShape& shape,
                          const PolygonTriangulation& tri) {
  if (shape.n() != tri.n) {
    throw std::invalid_argument("chart_coords: vertex count mismatch");
  }
  const auto& v = shape.vertices();
  std::vector<double> lengths(tri.edge_endpoints.size());
  for (size_t e = 0; e < lengths.size(); ++e) {
    lengths[e] = dist(v[tri.edge_endpoints[e].first],
                      v[tri.edge_endpoints[e].second]);
  }
  return SurfacePoint::from_edge_lengths(tri.complex, lengths);
}

PolygonShape shape_from_chart(const SurfacePoint& p,
                              const PolygonTriangulation& tri) {
  if (p.tri_ptr() != tri.complex &&
      (p.tri().edge_count() != tri.complex->edge_count() ||
       p.tri().faces() != tri.complex->faces())) {
    throw std::invalid_argument(
        "shape_from_chart: point does not live in this chart");
  }
  const auto lengths = p.edge_lengths();
  auto edge_of = [&](int a, int b) {
    const std::pair<int, int> key = a < b ? std::pair<int, int>{a, b}
                                          : std::pair<int, int>{b, a};
    for (size_t e = 0; e < tri.edge_endpoints.size(); ++e) {
      std::pair<int, int> ep = tri.edge_endpoints[e];
      if (ep.first > ep.second) std::swap(ep.first, ep.second);
      if (ep == key) return static_cast<int>(e);
    }
    throw std::logic_error("shape_from_chart: missing edge");
  };

  const int n = tri.n;
  std::vector<std::optional<Vec2>> pos(n);
  std::vector<bool> placed(tri.face_vertices.size(), false);

  // first face: base along +x, apex to the left
  {
    const auto& f = tri.face_vertices[0];
    const double lab = lengths[edge_of(f[0], f[1])];
    const double lbc = lengths[edge_of(f[1], f[2])];
    const double lca = lengths[edge_of(f[2], f[0])];
    pos[f[0]] = Vec2{0.0, 0.0};
    pos[f[1]] = Vec2{lab, 0.0};
    const double px = (lca * lca + lab * lab - lbc * lbc) / (2.0 * lab);
    const double py2 = lca * lca - px * px;
    if (!(py2 > 0.0)) {
      throw std::domain_error("shape_from_chart: degenerate face");
    }
    pos[f[2]] = Vec2{px, std::sqrt(py2)};
    placed[0] = true;
  }

  // breadth-first over the dual tree: each further face shares one edge
  // with the placed region and contributes one new vertex
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t fi = 0; fi < tri.face_vertices.size(); ++fi) {
      if (placed[fi]) continue;
      const auto& f = tri.face_vertices[fi];
      int unknown = -1, known = 0;
      for (int s = 0; s < 3; ++s) {
        if (pos[f[s]]) {
          ++known;
        } else {
          unknown = s;
        }
      }
      if (known < 2) continue;
      placed[fi] = true;
      progress = true;
      if (known == 3) continue;
      // rotate so the two placed vertices come first, ccw preserved
      const int w = f[unknown];
      const int u = f[(unknown + 1) % 3];
      const int vtx = f[(unknown + 2) % 3];
      const double luw = lengths[edge_of(u, w)];
      const double lvw = lengths[edge_of(vtx, w)];
      const Vec2 pu = *pos[u], pv = *pos[vtx];
      const double d = dist(pu, pv);
      const double px = (luw * luw + d * d - lvw * lvw) / (2.0 * d);
      const double py2 = luw * luw - px * px;
      if (!(py2 > 0.0)) {
        throw std::domain_error("shape_from_chart: degenerate face");
      }
      const double py = std::sqrt(py2);
      const Vec2 dir{(pv.x - pu.x) / d, (pv.y - pu.y) / d};
      const Vec2 perp{-dir.y, dir.x};
      pos[w] = Vec2{pu.x + px * dir.x + py * perp.x,
                    pu.y + px * dir.y + py * perp.y};
    }
  }

  std::vector<Vec2> out(n);
  for (int i = 0; i < n; ++i) {
    if (!pos[i]) {
      throw std::logic_error("shape_from_chart: development left a vertex "
                             "unplaced (disconnected dual graph)");
    }
    out[i] = *pos[i];
  }
  const double area = polygon_area(out);
  if (!(area > 0.0)) {
    throw not_convex_error("shape_from_chart: development reverses "
                           "orientation");
  }
  if (std::abs(area - 1.0) > 1e-10) {
    throw constraint_error("shape_from_chart: developed area " +
                           std::to_string(area) + " is not 1");
  }
  return PolygonShape::from_vertices(std::move(out), /*rescale_area=*/true);
}

double eta_sup(const PolygonShape& X, const PolygonShape& Y) {
  if (X.n() != Y.n()) {
    throw std::invalid_argument("eta_sup: vertex count mismatch");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& tri : enumerate_triangulations(X.n())) {
    best = std::max(best, eta_T(chart_coords(X, tri), chart_coords(Y, tri)));
  }
  return best;
}

double eta_avg(const PolygonShape& X, const PolygonShape& Y) {
  if (X.n() != Y.n()) {
    throw std::invalid_argument("eta_avg: vertex count mismatch");
  }
  const auto& charts = enumerate_triangulations(X.n());
  double acc = 0.0;
  for (const auto& tri : charts) {
    acc += eta_T(chart_coords(X, tri), chart_coords(Y, tri));
  }
  return acc / static_cast<double>(charts.size());
}

namespace {

// gradient of the shoelace area at the shape's vertices
std::vector<Vec2> area_gradient(const PolygonShape& X) {
  const auto& v = X.vertices();
  const int n = X.n();
  std::vector<Vec2> g(n);
  for (int i = 0; i < n; ++i) {
    const Vec2& prev = v[(i + n - 1) % n];
    const Vec2& next = v[(i + 1) % n];
    g[i] = {(next.y - prev.y) / 2.0, (prev.x - next.x) / 2.0};
  }
  return g;
}

ShapeTangent validate_and_project(const PolygonShape& X,
                                  const ShapeTangent& v) {
  const int n = X.n();
  if (static_cast<int>(v.d.size()) != n) {
    throw std::invalid_argument("shape tangent size mismatch");
  }
  double vmax = 0.0;
  for (const auto& p : v.d) {
    vmax = std::max({vmax, std::abs(p.x), std::abs(p.y)});
  }
  const double gauge_tol = 1e-12 * std::max(1.0, vmax);
  if (std::abs(v.d[0].x) > gauge_tol || std::abs(v.d[0].y) > gauge_tol ||
      std::abs(v.d[1].y) > gauge_tol) {
    throw std::invalid_argument(
        "shape tangent must fix the pose gauge (vertex 0 and the direction "
        "of vertex 1)");
  }

  const auto g = area_gradient(X);
  double da = 0.0, mag = 0.0;
  for (int i = 0; i < n; ++i) {
    da += g[i].x * v.d[i].x + g[i].y * v.d[i].y;
    mag += std::abs(g[i].x * v.d[i].x) + std::abs(g[i].y * v.d[i].y);
  }
  if (mag > 0.0 && std::abs(da) > 1e-8 * mag) {
    throw std::invalid_argument(
        "shape tangent does not preserve area to first order");
  }

  // remove the remaining area component along the gauge-fixed gradient
  std::vector<Vec2> gg = g;
  gg[0] = {0.0, 0.0};
  gg[1].y = 0.0;
  double norm2 = 0.0;
  for (const auto& p : gg) norm2 += p.x * p.x + p.y * p.y;
  ShapeTangent out = v;
  if (norm2 > 0.0) {
    double da_g = 0.0;
    for (int i = 0; i < n; ++i) {
      da_g += gg[i].x * v.d[i].x + gg[i].y * v.d[i].y;
    }
    const double alpha = da_g / norm2;
    for (int i = 0; i < n; ++i) {
      out.d[i].x -= alpha * gg[i].x;
      out.d[i].y -= alpha * gg[i].y;
    }
    out.d[0] = {0.0, 0.0};
    out.d[1].y = 0.0;
  }
  return out;
}

SurfaceTangent push_to_chart(const PolygonShape& X, const ShapeTangent& v,
                             const PolygonTriangulation& tri,
                             const SurfacePoint& base) {
  const auto& pts = X.vertices();
  std::vector<double> dl(tri.edge_endpoints.size());
  for (size_t e = 0; e < dl.size(); ++e) {
    const auto [a, b] = tri.edge_endpoints[e];
    const Vec2 diff = sub(pts[a], pts[b]);
    const double len = std::hypot(diff.x, diff.y);
    const Vec2 dv = sub(v.d[a], v.d[b]);
    dl[e] = (diff.x * dv.x + diff.y * dv.y) / len;
  }
  SurfaceTangent out{base, {}};
  out.v.resize(tri.face_vertices.size());
  const auto& faces = tri.complex->faces();
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& tr = faces[f];
    out.v[f] = {(dl[tr[1]] + dl[tr[2]] - dl[tr[0]]) / 2.0,
                (dl[tr[2]] + dl[tr[0]] - dl[tr[1]]) / 2.0,
                (dl[tr[0]] + dl[tr[1]] - dl[tr[2]]) / 2.0};
  }
  return out;
}

double finsler_combined(const PolygonShape& X, const ShapeTangent& raw,
                        ChartCombine which) {
  const ShapeTangent v = validate_and_project(X, raw);
  const auto& charts = enumerate_triangulations(X.n());
  double best = -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (const auto& tri : charts) {
    const SurfacePoint base = chart_coords(X, tri);
    const double val = finsler_T(push_to_chart(X, v, tri, base));
    best = std::max(best, val);
    acc += val;
  }
  return which == ChartCombine::sup
             ? best
             : acc / static_cast<double>(charts.size());
}

}  // namespace

double finsler_sup(const PolygonShape& X, const ShapeTangent& v) {
  return finsler_combined(X, v, ChartCombine::sup);
}

double finsler_avg(const PolygonShape& X, const ShapeTangent& v) {
  return finsler_combined(X, v, ChartCombine::avg);
}

PathSpace polygon_path_space(int n, ChartCombine which) {
  if (n < 3 || n > 12) {
    throw std::invalid_argument("polygon_path_space: n must lie in [3, 12]");
  }
  PathSpace s;
  s.norm = [which](const Coords& base, const Coords& vel) {
    const PolygonShape shape = PolygonShape::from_flat(base);
    ShapeTangent t;
    t.d.resize(vel.size() / 2);
    for (size_t i = 0; i < t.d.size(); ++i) {
      t.d[i] = {vel[2 * i], vel[2 * i + 1]};
    }
    return finsler_combined(shape, t, which);
  };
  s.interpolate = [](const Coords& a, const Coords& b, double u) {
    Coords h(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      h[i] = (1.0 - u) * a[i] + u * b[i];
    }
    double area = 0.0;
    const size_t m = h.size() / 2;
    for (size_t i = 0; i < m; ++i) {
      const size_t j = (i + 1) % m;
      area += h[2 * i] * h[2 * j + 1] - h[2 * j] * h[2 * i + 1];
    }
    area /= 2.0;
    if (!(area > 0.0)) {
      throw std::domain_error("polygon interpolation collapsed");
    }
    const double scale = 1.0 / std::sqrt(area);
    for (double& x : h) x *= scale;
    return h;
  };
  s.velocity = [](const Coords& a, const Coords& b, double u) {
    const size_t m = a.size() / 2;
    Coords h(a.size()), hp(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      h[i] = (1.0 - u) * a[i] + u * b[i];
      hp[i] = b[i] - a[i];
    }
    double area = 0.0, darea = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const size_t j = (i + 1) % m;
      area += h[2 * i] * h[2 * j + 1] - h[2 * j] * h[2 * i + 1];
      darea += hp[2 * i] * h[2 * j + 1] + h[2 * i] * hp[2 * j + 1] -
               hp[2 * j] * h[2 * i + 1] - h[2 * j] * hp[2 * i + 1];
    }
    area /= 2.0;
    darea /= 2.0;
    const double sfac = 1.0 / std::sqrt(area);
    const double dsfac = -0.5 * sfac / area * darea;
    Coords v(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      v[i] = dsfac * h[i] + sfac * hp[i];
    }
    return v;
  };
  s.project = [](const Coords& c) {
    const size_t m = c.size() / 2;
    double area = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const size_t j = (i + 1) % m;
      area += c[2 * i] * c[2 * j + 1] - c[2 * j] * c[2 * i + 1];
    }
    area /= 2.0;
    if (!(area > 0.0)) {
      throw std::domain_error("polygon projection: nonpositive area");
    }
    const double scale = 1.0 / std::sqrt(area);
    Coords out = c;
    for (double& x : out) x *= scale;
    return out;
  };
  s.valid = [](const Coords& c) {
    try {
      PolygonShape::from_flat(c);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  };
  s.jitter = [](const Coords& c, std::mt19937_64& rng) {
    std::normal_distribution<double> noise(0.0, 0.03);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Coords out = c;
      for (size_t i = 2; i < out.size(); ++i) {
        if (i == 3) continue;
        out[i] += noise(rng) * std::max(std::abs(out[i]), 0.1);
      }
      try {
        double area = 0.0;
        const size_t m = out.size() / 2;
        for (size_t i = 0; i < m; ++i) {
          const size_t j = (i + 1) % m;
          area += out[2 * i] * out[2 * j + 1] - out[2 * j] * out[2 * i + 1];
        }
        if (!(area > 0.0)) continue;
        const double scale = 1.0 / std::sqrt(area / 2.0);
        for (double& x : out) x *= scale;
        PolygonShape::from_flat(out);
        return out;
      } catch (const std::exception&) {
      }
    }
    return c;
  };
  s.mutable_dims.push_back(2);
  for (int i = 4; i < 2 * n; ++i) {
    s.mutable_dims.push_back(static_cast<std::size_t>(i));
  }
  return s;
}

double path_metric_upper(const PolygonShape& X, const PolygonShape& Y,
                         ChartCombine which, int K, int restarts,
                         std::uint64_t seed, const MinimizeOptions* tuning) {
  if (X.n() != Y.n()) {
    throw std::invalid_argument("path_metric_upper: vertex count mismatch");
  }
  if (K < 2) {
    throw std::invalid_argument("path_metric_upper: K must be >= 2");
  }
  const PathSpace space = polygon_path_space(X.n(), which);
  MinimizeOptions opt;
  if (tuning) opt = *tuning;
  opt.restarts = restarts;
  opt.seed = seed;

  const Coords xf = X.flat(), yf = Y.flat();

  // candidate warm starts: the straight-line path plus, per chart, the
  // developed log-linear geodesic (when it stays convex)
  std::vector<DiscretePath> candidates;
  {
    DiscretePath straight;
    for (int i = 0; i < K; ++i) {
      const double t = static_cast<double>(i) / (K - 1);
      straight.waypoints.push_back(space.interpolate(xf, yf, t));
    }
    candidates.push_back(std::move(straight));
  }
  for (const auto& tri : enumerate_triangulations(X.n())) {
    try {
      const SurfacePoint px = chart_coords(X, tri);
      const SurfacePoint py = chart_coords(Y, tri);
      const SurfaceGeodesic geo =
          geodesic_T(px, py, std::numeric_limits<double>::infinity());
      DiscretePath path;
      for (int i = 0; i < K; ++i) {
        const double t = static_cast<double>(i) / (K - 1);
        path.waypoints.push_back(shape_from_chart(geo(t), tri).flat());
      }
      candidates.push_back(std::move(path));
    } catch (const std::exception&) {
      // chart geodesic leaves the convex locus; skip this seed path
    }
  }

  int best_idx = 0;
  double best_init = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < candidates.size(); ++i) {
    const double len = discrete_length(space, candidates[i], opt.quad_panels);
    if (len < best_init) {
      best_init = len;
      best_idx = static_cast<int>(i);
    }
  }

  const MinimizeResult res = minimize_length(space, xf, yf, K, opt,
                                             candidates[best_idx]);
  return res.length;
}

PolygonShape random_convex_polygon(int n, std::mt19937_64& rng) {
  if (n < 3) {
    throw std::invalid_argument("random_convex_polygon: n must be >= 3");
  }
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> aspect(0.5, 2.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> th(n);
    for (double& t : th) t = angle(rng);
    std::sort(th.begin(), th.end());
    const double a = aspect(rng);
    std::vector<Vec2> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = {a * std::cos(th[i]), std::sin(th[i])};
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Vec2 e0 = sub(v[(i + 1) % n], v[i]);
      const Vec2 e1 = sub(v[(i + 2) % n], v[(i + 1) % n]);
      const double turn = std::atan2(cross(e0, e1),
                                     e0.x * e1.x + e0.y * e1.y);
      if (!(turn > 1e-3)) ok = false;  // interior angle within 1e-3 of pi
    }
    if (!ok) continue;
    try {
      return PolygonShape::from_vertices(std::move(v), /*rescale_area=*/true);
    } catch (const std::exception&) {
    }
  }
  throw numerical_error("random_convex_polygon: rejection sampling failed",
                        0.0);
}

}  // namespace trispace
