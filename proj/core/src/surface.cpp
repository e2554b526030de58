#include "trispace/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trispace/errors.hpp"

namespace trispace {

namespace {

void require_unit_interval(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": t must lie in [0,1]");
  }
}

// length of the edge sitting at `slot` of `face`, from that face's side
double side_length(const std::vector<std::array<double, 3>>& slots, int face,
                   int slot) {
  return slots[face][(slot + 1) % 3] + slots[face][(slot + 2) % 3];
}

void require_same_triangulation(const SurfacePoint& p, const SurfacePoint& q,
                                const char* who) {
  if (p.tri_ptr() == q.tri_ptr()) return;
  const Triangulation& a = p.tri();
  const Triangulation& b = q.tri();
  if (a.edge_count() == b.edge_count() && a.faces() == b.faces()) return;
  throw std::invalid_argument(std::string(who) +
                              ": points live on different triangulations");
}

}  // namespace

std::shared_ptr<const Triangulation> Triangulation::build(
    int edge_count, std::vector<std::array<int, 3>> faces) {
  if (edge_count < 1 || faces.empty()) {
    throw std::invalid_argument(
        "Triangulation: need at least one edge and one face");
  }
  auto tri = std::shared_ptr<Triangulation>(new Triangulation());
  tri->edge_count_ = edge_count;
  tri->faces_ = std::move(faces);
  tri->uses_.assign(edge_count, {});
  for (int f = 0; f < tri->face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      const int e = tri->faces_[f][s];
      if (e < 0 || e >= edge_count) {
        throw std::invalid_argument("Triangulation: edge index out of range");
      }
      tri->uses_[e].push_back({f, s});
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    const auto n = tri->uses_[e].size();
    if (n == 0) {
      throw std::invalid_argument("Triangulation: edge " + std::to_string(e) +
                                  " is unused");
    }
    if (n > 2) {
      throw std::invalid_argument("Triangulation: edge " + std::to_string(e) +
                                  " is used more than twice");
    }
    if (n == 2) tri->interior_.push_back(e);
  }
  return tri;
}

std::vector<std::array<int, 3>> Triangulation::index_set() const {
  std::vector<std::array<int, 3>> J;
  J.reserve(3 * faces_.size());
  for (const auto& f : faces_) {
    J.push_back({f[0], f[1], f[2]});
    J.push_back({f[1], f[2], f[0]});
    J.push_back({f[2], f[0], f[1]});
  }
  return J;
}

SurfacePoint::SurfacePoint(std::shared_ptr<const Triangulation> tri,
                           std::vector<std::array<double, 3>> slots)
    : tri_(std::move(tri)), slots_(std::move(slots)) {
  double total = 0.0;
  for (const auto& s : slots_) {
    total += heron_area(TriCoords::from_array(s));
  }
  area_ = total;
}

SurfacePoint SurfacePoint::from_slots(
    std::shared_ptr<const Triangulation> tri,
    std::vector<std::array<double, 3>> slots, double tol) {
  if (!tri || static_cast<int>(slots.size()) != tri->face_count()) {
    throw std::invalid_argument("SurfacePoint: slot rows must match faces");
  }
  for (const auto& row : slots) {
    validate(TriCoords::from_array(row));
  }
  for (const int e : tri->interior_edges()) {
    const auto& uses = tri->uses(e);
    const double la = side_length(slots, uses[0].face, uses[0].slot);
    const double lb = side_length(slots, uses[1].face, uses[1].slot);
    if (std::abs(la - lb) > tol * std::max(la, lb)) {
      throw constraint_error(
          "SurfacePoint: interior edge " + std::to_string(e) +
          " has inconsistent lengths " + std::to_string(la) + " vs " +
          std::to_string(lb));
    }
  }
  return SurfacePoint(std::move(tri), std::move(slots));
}

SurfacePoint SurfacePoint::from_edge_lengths(
    std::shared_ptr<const Triangulation> tri, std::span<const double> l) {
  if (!tri || static_cast<int>(l.size()) != tri->edge_count()) {
    throw std::invalid_argument(
        "SurfacePoint: need one length per edge of the triangulation");
  }
  std::vector<std::array<double, 3>> slots(tri->face_count());
  for (int f = 0; f < tri->face_count(); ++f) {
    const auto& tr = tri->faces()[f];
    const double li = l[tr[0]], lj = l[tr[1]], lk = l[tr[2]];
    slots[f] = {(lj + lk - li) / 2.0, (lk + li - lj) / 2.0,
                (li + lj - lk) / 2.0};
    validate(TriCoords::from_array(slots[f]));
  }
  return SurfacePoint(std::move(tri), std::move(slots));
}

std::vector<double> SurfacePoint::edge_lengths() const {
  std::vector<double> l(tri_->edge_count());
  for (int e = 0; e < tri_->edge_count(); ++e) {
    const auto& u = tri_->uses(e)[0];
    l[e] = side_length(slots_, u.face, u.slot);
  }
  return l;
}

double SurfacePoint::constraint_residual() const {
  double worst = 0.0;
  for (const int e : tri_->interior_edges()) {
    const auto& uses = tri_->uses(e);
    const double la = side_length(slots_, uses[0].face, uses[0].slot);
    const double lb = side_length(slots_, uses[1].face, uses[1].slot);
    worst = std::max(worst, std::abs(la - lb) / std::max(la, lb));
  }
  return worst;
}

std::vector<double> SurfacePoint::flat() const {
  std::vector<double> out;
  out.reserve(3 * slots_.size());
  for (const auto& row : slots_) {
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

double surface_area(const SurfacePoint& p) { return p.area(); }

std::pair<SurfacePoint, double> normalize_unit_area(const SurfacePoint& p) {
  const double lambda = 1.0 / std::sqrt(p.area());
  auto slots = p.slots();
  for (auto& row : slots) {
    for (double& x : row) x *= lambda;
  }
  return {SurfacePoint::from_slots(p.tri_ptr(), std::move(slots)), lambda};
}

double eta_T(const SurfacePoint& p, const SurfacePoint& q) {
  require_same_triangulation(p, q, "eta_T");
  return max_log_ratio(p.flat(), q.flat());
}

double eta_T_family_arith(double t, const SurfacePoint& p,
                          const SurfacePoint& q) {
  require_unit_interval(t, "eta_T_family_arith");
  return (1.0 - t) * eta_T(p, q) + t * eta_T(q, p);
}

double eta_T_family_max(double t, const SurfacePoint& p,
                        const SurfacePoint& q) {
  require_unit_interval(t, "eta_T_family_max");
  return std::max((1.0 - t) * eta_T(p, q), t * eta_T(q, p));
}

SurfaceGeodesic::SurfaceGeodesic(SurfacePoint start, SurfacePoint end,
                                 double projection_budget)
    : start_(std::move(start)), end_(std::move(end)),
      budget_(projection_budget) {
  require_same_triangulation(start_, end_, "geodesic_T");
}

std::vector<double> SurfaceGeodesic::interpolate(double t) const {
  const auto x = start_.flat();
  const auto y = end_.flat();
  std::vector<double> w(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    w[i] = std::pow(x[i], 1.0 - t) * std::pow(y[i], t);
  }
  double total = 0.0;
  for (size_t f = 0; f + 2 < w.size(); f += 3) {
    total += heron_area({w[f], w[f + 1], w[f + 2]});
  }
  const double lambda = 1.0 / std::sqrt(total);
  for (double& v : w) v *= lambda;
  return w;
}

std::vector<double> SurfaceGeodesic::ambient(double t) const {
  require_unit_interval(t, "SurfaceGeodesic");
  if (t == 0.0) return start_.flat();
  if (t == 1.0) return end_.flat();
  return interpolate(t);
}

SurfacePoint SurfaceGeodesic::operator()(double t) const {
  double residual = 0.0;
  SurfacePoint out = project(t, residual);
  if (residual > budget_) {
    throw numerical_error(
        "geodesic_T: projection onto the gluing constraints moved the "
        "sample by " +
            std::to_string(residual) + " (budget " + std::to_string(budget_) +
            "); the log-linear interpolation leaves the constraint set",
        residual);
  }
  return out;
}

double SurfaceGeodesic::projection_residual(double t) const {
  double residual = 0.0;
  project(t, residual);
  return residual;
}

SurfacePoint SurfaceGeodesic::project(double t, double& residual) const {
  require_unit_interval(t, "SurfaceGeodesic");
  residual = 0.0;
  if (t == 0.0) return start_;
  if (t == 1.0) return end_;

  const Triangulation& tri = start_.tri();
  const auto amb = interpolate(t);
  std::vector<std::array<double, 3>> rows(tri.face_count());
  for (int f = 0; f < tri.face_count(); ++f) {
    rows[f] = {amb[3 * f], amb[3 * f + 1], amb[3 * f + 2]};
  }
  if (tri.interior_edges().empty()) {
    return SurfacePoint::from_slots(start_.tri_ptr(), std::move(rows));
  }

  // average the two face-side lengths of every edge, rebuild the slots
  // from the averaged lengths, rescale to unit area
  std::vector<double> l(tri.edge_count());
  for (int e = 0; e < tri.edge_count(); ++e) {
    const auto& uses = tri.uses(e);
    double acc = 0.0;
    for (const auto& u : uses) acc += side_length(rows, u.face, u.slot);
    l[e] = acc / static_cast<double>(uses.size());
  }
  std::vector<std::array<double, 3>> rebuilt(tri.face_count());
  double total = 0.0;
  for (int f = 0; f < tri.face_count(); ++f) {
    const auto& tr = tri.faces()[f];
    rebuilt[f] = {(l[tr[1]] + l[tr[2]] - l[tr[0]]) / 2.0,
                  (l[tr[2]] + l[tr[0]] - l[tr[1]]) / 2.0,
                  (l[tr[0]] + l[tr[1]] - l[tr[2]]) / 2.0};
    for (double v : rebuilt[f]) {
      if (!(v > 0.0)) {
        throw std::domain_error(
            "geodesic_T: projected sample violates a triangle inequality");
      }
    }
    total += heron_area(TriCoords::from_array(rebuilt[f]));
  }
  const double lambda = 1.0 / std::sqrt(total);
  for (int f = 0; f < tri.face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      rebuilt[f][s] *= lambda;
      residual = std::max(
          residual, std::abs(std::log(rebuilt[f][s] / amb[3 * f + s])));
    }
  }
  return SurfacePoint::from_slots(start_.tri_ptr(), std::move(rebuilt));
}

SurfaceGeodesic geodesic_T(const SurfacePoint& p, const SurfacePoint& q,
                           double projection_budget) {
  return SurfaceGeodesic(p, q, projection_budget);
}

GeodesicCheck verify_geodesic_T(
    std::span<const std::pair<double, std::vector<double>>> samples,
    int slot_count, double slack) {
  if (samples.size() < 2) {
    throw std::invalid_argument("verify_geodesic_T: need at least two samples");
  }
  for (size_t s = 0; s + 1 < samples.size(); ++s) {
    if (!(samples[s].first <= samples[s + 1].first)) {
      throw std::invalid_argument(
          "verify_geodesic_T: samples must be sorted in t");
    }
  }
  std::vector<std::vector<double>> logs(samples.size());
  for (size_t s = 0; s < samples.size(); ++s) {
    const auto& v = samples[s].second;
    if (static_cast<int>(v.size()) != slot_count) {
      throw std::invalid_argument("verify_geodesic_T: slot count mismatch");
    }
    logs[s].resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] > 0.0)) {
        throw std::domain_error("verify_geodesic_T: slots must be positive");
      }
      logs[s][i] = std::log(v[i]);
    }
  }

  GeodesicCheck out;
  for (int j = 0; j < slot_count; ++j) {
    bool dominated = true;
    for (size_t s = 0; s < samples.size() && dominated; ++s) {
      for (size_t u = s + 1; u < samples.size() && dominated; ++u) {
        const double dj = logs[u][j] - logs[s][j];
        for (int i = 0; i < slot_count; ++i) {
          const double di = logs[u][i] - logs[s][i];
          if (di > dj + slack) {
            out.witnesses.push_back({i, samples[s].first, samples[u].first, j});
            dominated = false;
            break;
          }
        }
      }
    }
    if (dominated) {
      out.ok = true;
      out.dominating_index = j;
      out.witnesses.clear();
      return out;
    }
  }
  out.ok = false;
  return out;
}

double tangent_constraint_residual(const SurfaceTangent& t) {
  const Triangulation& tri = t.base.tri();
  double worst = 0.0;
  for (const int e : tri.interior_edges()) {
    const auto& uses = tri.uses(e);
    double side[2], mag[2];
    for (int u = 0; u < 2; ++u) {
      const int f = uses[u].face, s = uses[u].slot;
      const double va = t.v[f][(s + 1) % 3], vb = t.v[f][(s + 2) % 3];
      side[u] = va + vb;
      mag[u] = std::abs(va) + std::abs(vb);
    }
    const double den = mag[0] + mag[1];
    if (den == 0.0) continue;
    worst = std::max(worst, std::abs(side[0] - side[1]) / den);
  }
  return worst;
}

double tangent_area_residual(const SurfaceTangent& t) {
  double num = 0.0, den = 0.0;
  for (int f = 0; f < t.base.tri().face_count(); ++f) {
    const TriCoords c = t.base.face_coords(f);
    const double face_area = heron_area(c);
    const auto& v = t.v[f];
    // d(face area) = d(squared area) / (2 area)
    const double p = c.A1 * c.A2 * c.A3;
    const double c1 = 2.0 * p + c.A2 * c.A3 * (c.A2 + c.A3);
    const double c2 = 2.0 * p + c.A1 * c.A3 * (c.A1 + c.A3);
    const double c3 = 2.0 * p + c.A1 * c.A2 * (c.A1 + c.A2);
    num += (c1 * v[0] + c2 * v[1] + c3 * v[2]) / (2.0 * face_area);
    den += (std::abs(c1 * v[0]) + std::abs(c2 * v[1]) + std::abs(c3 * v[2])) /
           (2.0 * face_area);
  }
  if (den == 0.0) return 0.0;
  return std::abs(num) / den;
}

double finsler_T(const SurfaceTangent& v, double band) {
  if (static_cast<int>(v.v.size()) != v.base.tri().face_count()) {
    throw std::invalid_argument("finsler_T: tangent rows must match faces");
  }
  if (tangent_constraint_residual(v) > band ||
      tangent_area_residual(v) > band) {
    throw std::invalid_argument(
        "finsler_T: vector violates the tangency constraints");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (int f = 0; f < v.base.tri().face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      best = std::max(best, v.v[f][s] / v.base.slot(f, s));
    }
  }
  return best;
}

double finsler_T_family(double t, const SurfaceTangent& v, double band) {
  require_unit_interval(t, "finsler_T_family");
  SurfaceTangent neg{v.base, v.v};
  for (auto& row : neg.v) {
    for (double& x : row) x = -x;
  }
  return (1.0 - t) * finsler_T(v, band) + t * finsler_T(neg, band);
}

std::shared_ptr<const Triangulation> two_face_disc() {
  return Triangulation::build(5, {{0, 1, 2}, {0, 3, 4}});
}

std::pair<SurfacePoint, SurfacePoint> incomplete_example_pair(long n) {
  if (n < 1) {
    throw std::invalid_argument("incomplete_example_pair: n must be >= 1");
  }
  static const std::shared_ptr<const Triangulation> tri = two_face_disc();
  const double sqrt3 = std::sqrt(3.0);
  const double nn = static_cast<double>(n);

  auto make = [&](double x, double scale_sq) {
    // x = side^2 - 1 for the thin face's equal sides, scale_sq = c^2;
    // side - 1 computed as x / (1 + sqrt(1 + x)) to survive cancellation
    const double c = std::sqrt(scale_sq);
    const double thin = (x / (1.0 + std::sqrt(1.0 + x))) / c;
    const double unit = 1.0 / c;
    std::vector<std::array<double, 3>> slots{{thin, unit, unit},
                                             {unit, unit, unit}};
    return SurfacePoint::from_slots(tri, std::move(slots));
  };

  SurfacePoint q = make(1.0 / (nn * nn), sqrt3 + 1.0 / nn);
  SurfacePoint qp = make(4.0 / (nn * nn), sqrt3 + 2.0 / nn);
  return {std::move(q), std::move(qp)};
}

}  // namespace trispace
