#include "trispace/triangle_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trispace {

namespace {

constexpr double kUnitAreaTol = 1e-12;

void require_unit_interval(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": t must lie in [0,1]");
  }
}

}  // namespace

TrianglePoint TrianglePoint::from_coords(const TriCoords& c) {
  const double area = heron_area(c);
  if (std::abs(area - 1.0) > kUnitAreaTol) {
    throw std::domain_error("TrianglePoint: coordinates do not have unit area");
  }
  return {c};
}

TrianglePoint TrianglePoint::normalized(const TriCoords& c) {
  return {normalize_unit_area(c).first};
}

double area_differential(const TriCoords& c, double v1, double v2, double v3) {
  const double p = c.A1 * c.A2 * c.A3;
  const double c1 = 2.0 * p + c.A2 * c.A3 * (c.A2 + c.A3);
  const double c2 = 2.0 * p + c.A1 * c.A3 * (c.A1 + c.A3);
  const double c3 = 2.0 * p + c.A1 * c.A2 * (c.A1 + c.A2);
  return c1 * v1 + c2 * v2 + c3 * v3;
}

double tangency_residual(const TangentVector& v) {
  const TriCoords& c = v.base.coords;
  const double p = c.A1 * c.A2 * c.A3;
  const double c1 = 2.0 * p + c.A2 * c.A3 * (c.A2 + c.A3);
  const double c2 = 2.0 * p + c.A1 * c.A3 * (c.A1 + c.A3);
  const double c3 = 2.0 * p + c.A1 * c.A2 * (c.A1 + c.A2);
  const double num = std::abs(c1 * v.v1 + c2 * v.v2 + c3 * v.v3);
  const double den = std::abs(c1 * v.v1) + std::abs(c2 * v.v2) +
                     std::abs(c3 * v.v3);
  if (den == 0.0) return 0.0;
  return num / den;
}

double eta(const TriCoords& X, const TriCoords& Y) {
  return eta_argmax(X, Y).first;
}

std::pair<double, int> eta_argmax(const TriCoords& X, const TriCoords& Y) {
  validate(X);
  validate(Y);
  const auto x = X.to_array();
  const auto y = Y.to_array();
  return max_log_ratio_argmax(x, y);
}

double eta_family_arith(double t, const TrianglePoint& X,
                        const TrianglePoint& Y) {
  require_unit_interval(t, "eta_family_arith");
  return (1.0 - t) * eta(X.coords, Y.coords) + t * eta(Y.coords, X.coords);
}

double eta_family_max(double t, const TrianglePoint& X,
                      const TrianglePoint& Y) {
  require_unit_interval(t, "eta_family_max");
  return std::max((1.0 - t) * eta(X.coords, Y.coords),
                  t * eta(Y.coords, X.coords));
}

double d_max(const TrianglePoint& X, const TrianglePoint& Y) {
  return std::max(eta(X.coords, Y.coords), eta(Y.coords, X.coords));
}

TrianglePoint GeodesicPath::operator()(double t) const {
  require_unit_interval(t, "GeodesicPath");
  if (t == 0.0) return start;
  if (t == 1.0) return end;
  const auto x = start.coords.to_array();
  const auto y = end.coords.to_array();
  TriCoords mid{std::pow(x[0], 1.0 - t) * std::pow(y[0], t),
                std::pow(x[1], 1.0 - t) * std::pow(y[1], t),
                std::pow(x[2], 1.0 - t) * std::pow(y[2], t)};
  return TrianglePoint::normalized(mid);
}

GeodesicPath geodesic(const TrianglePoint& X, const TrianglePoint& Y) {
  return {X, Y};
}

GeodesicCheck verify_geodesic(
    std::span<const std::pair<double, TriCoords>> samples, double slack) {
  if (samples.size() < 2) {
    throw std::invalid_argument("verify_geodesic: need at least two samples");
  }
  for (size_t s = 0; s + 1 < samples.size(); ++s) {
    if (!(samples[s].first <= samples[s + 1].first)) {
      throw std::invalid_argument("verify_geodesic: samples must be sorted in t");
    }
  }

  // log-coordinates once
  std::vector<std::array<double, 3>> logs(samples.size());
  for (size_t s = 0; s < samples.size(); ++s) {
    validate(samples[s].second);
    const auto a = samples[s].second.to_array();
    logs[s] = {std::log(a[0]), std::log(a[1]), std::log(a[2])};
  }

  GeodesicCheck out;
  for (int j = 0; j < 3; ++j) {
    bool dominated = true;
    for (size_t s = 0; s < samples.size() && dominated; ++s) {
      for (size_t u = s + 1; u < samples.size() && dominated; ++u) {
        const double dj = logs[u][j] - logs[s][j];
        for (int i = 0; i < 3; ++i) {
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

double finsler_norm(const TangentVector& v, double tangency_band) {
  const double res = tangency_residual(v);
  if (res > tangency_band) {
    throw std::invalid_argument(
        "finsler_norm: vector is not tangent to the unit-area constraint "
        "(residual " +
        std::to_string(res) + ")");
  }
  const auto a = v.base.coords.to_array();
  const auto w = v.to_array();
  double best = w[0] / a[0];
  for (int i = 1; i < 3; ++i) best = std::max(best, w[i] / a[i]);
  return best;
}

double finsler_family_arith(double t, const TangentVector& v,
                            double tangency_band) {
  require_unit_interval(t, "finsler_family_arith");
  TangentVector neg{v.base, -v.v1, -v.v2, -v.v3};
  return (1.0 - t) * finsler_norm(v, tangency_band) +
         t * finsler_norm(neg, tangency_band);
}

}  // namespace trispace
