#include "sphbary/sphere_classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sphbary/error.hpp"

namespace sphbary {

namespace {

double cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
double dot2(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
double length(const Point2& a) { return std::hypot(a.x, a.y); }

// Twice the signed area of (a, b, c).
double area2(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

void normalize_in_place(std::vector<double>& w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= total;
}

}  // namespace

std::array<Vec3, 2> tangent_basis(const UnitVector& x) {
  const Vec3& v = x;
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(v[i]) < std::abs(v[k])) k = i;
  }
  const Vec3 axis{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
  Vec3 b1 = axis - v * dot(axis, v);
  b1 = b1 / norm(b1);
  return {b1, cross(v, b1)};
}

TangentPolygon gnomonic_project(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol) {
  TangentPolygon t;
  const auto [b1, b2] = tangent_basis(x);
  t.b1 = b1;
  t.b2 = b2;
  t.points2d.reserve(ring.size());
  t.dots.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double d = dot(ring[i], x);
    if (!(d > tol.projection)) {
      throw GeometryError(ErrorCode::ProjectionUndefined,
                          "<v_" + std::to_string(i + 1) + ", x> = " + std::to_string(d));
    }
    const Vec3 image = ring[i].vec() / d;
    t.points2d.push_back({dot(image, b1), dot(image, b2)});
    t.dots.push_back(d);
  }
  return t;
}

std::vector<double> planar_mv(std::span<const Point2> polygon, const Tolerances& tol) {
  const std::size_t n = polygon.size();
  std::vector<double> r(n), half_tan(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = length(polygon[i]);
    if (r[i] <= tol.geom) throw GeometryError(ErrorCode::OriginOnBoundary, "origin is a vertex");
  }
  double winding = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % n];
    const double c = cross2(a, b);
    const double d = dot2(a, b);
    if (std::abs(c) <= tol.geom * r[i] * r[(i + 1) % n] && d < 0.0) {
      throw GeometryError(ErrorCode::OriginOnBoundary, "origin is on edge " + std::to_string(i + 1));
    }
    winding += std::atan2(c, d);
    // tan(gamma/2) = sin / (1 + cos)
    half_tan[i] = c / (r[i] * r[(i + 1) % n] + d);
  }
  if (std::lround(winding / (2.0 * std::numbers::pi)) != 1) {
    throw GeometryError(ErrorCode::OriginOutside, "origin is outside the planar polygon");
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = (half_tan[(i + n - 1) % n] + half_tan[i]) / r[i];
  normalize_in_place(w);
  return w;
}

std::vector<double> planar_wachspress(std::span<const Point2> polygon, const Tolerances& tol) {
  const std::size_t n = polygon.size();
  const Point2 origin{};
  for (const auto& u : polygon) {
    if (length(u) <= tol.geom) throw GeometryError(ErrorCode::OriginOnBoundary, "origin is a vertex");
  }
  std::vector<double> corner(n), fan(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = polygon[(i + n - 1) % n];
    const Point2& cur = polygon[i];
    const Point2& next = polygon[(i + 1) % n];
    corner[i] = area2(prev, cur, next);
    const double scale = std::hypot(cur.x - prev.x, cur.y - prev.y) * std::hypot(next.x - cur.x, next.y - cur.y);
    if (corner[i] < -tol.convexity * scale) {
      throw GeometryError(ErrorCode::NotConvex, "reflex vertex " + std::to_string(i + 1));
    }
    fan[i] = area2(origin, cur, next);
    const double rr = length(cur) * length(next);
    if (std::abs(fan[i]) <= tol.geom * rr) {
      throw GeometryError(ErrorCode::OriginOnBoundary, "origin is on edge " + std::to_string(i + 1));
    }
    if (fan[i] < 0.0) throw GeometryError(ErrorCode::OriginOutside, "origin is outside the planar polygon");
  }
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = corner[i] / (fan[(i + n - 1) % n] * fan[i]);
  normalize_in_place(w);
  return w;
}

CoordinateVector spherical_coords_classical(const SphericalPolygon& p, const UnitVector& x, PlanarBackend backend,
                                            const EvalOptions& options) {
  CoordinateVector out;
  out.method = backend == PlanarBackend::MeanValue ? Method::ClassicalMV : Method::ClassicalWC;
  out.location = locate_point(p, x, options.tol);
  if (std::holds_alternative<Exterior>(out.location)) {
    throw GeometryError(ErrorCode::ExteriorPoint, "point lies outside the polygon");
  }
  const TangentPolygon t = gnomonic_project(p.vertices(), x, options.tol);
  out.values = backend == PlanarBackend::MeanValue ? planar_mv(t, options.tol) : planar_wachspress(t, options.tol);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] /= t.dots[i];
  return out;
}

}  // namespace sphbary
