#include "sphbary/sphere_new.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sphbary/error.hpp"

namespace sphbary {

namespace {

constexpr double kPi = std::numbers::pi;

bool ring_is_convex(std::span<const UnitVector> ring, const Tolerances& tol) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (triple_product(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) < -tol.convexity) return false;
  }
  return true;
}

// Planar barycentric coordinates of the origin in the triangle (-x, u, v),
// from the normal equations of c1 (u + x) + c2 (v + x) = x.
void check_edge_limit(const UnitVector& u, const UnitVector& v, const UnitVector& x, double a, double b) {
  const Vec3 p = u.vec() + x.vec();
  const Vec3 q = v.vec() + x.vec();
  const double pp = dot(p, p), pq = dot(p, q), qq = dot(q, q);
  const double px = dot(p, x), qx = dot(q, x);
  const double det = pp * qq - pq * pq;
  const double c1 = (px * qq - pq * qx) / det;
  const double c2 = (pp * qx - pq * px) / det;
  const double c0 = 1.0 - c1 - c2;
  if (std::abs(c1 / c0 - a) > 1e-10 || std::abs(c2 / c0 - b) > 1e-10) {
    throw std::logic_error("edge limit mismatch: Gram (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") vs triangle (" + std::to_string(c1 / c0) + ", " + std::to_string(c2 / c0) + ")");
  }
}

// Vertex and edge cases shared by every variant of the new construction.
bool boundary_coords(std::span<const UnitVector> ring, const UnitVector& x, const PointLocation& loc,
                     const EvalOptions& options, CoordinateVector& out) {
  const std::size_t n = ring.size();
  if (const auto* vtx = std::get_if<OnVertex>(&loc)) {
    out.values.assign(n, 0.0);
    out.values[vtx->index] = 1.0;
    return true;
  }
  if (const auto* edge = std::get_if<OnEdge>(&loc)) {
    const std::size_t j = edge->edge;
    const std::size_t k = (j + 1) % n;
    if (options.check_edge_limit) check_edge_limit(ring[j], ring[k], x, edge->a, edge->b);
    out.values.assign(n, 0.0);
    out.values[j] = edge->a;
    out.values[k] = edge->b;
    return true;
  }
  return false;
}

}  // namespace

AngleCache angles(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol) {
  const std::size_t n = ring.size();
  AngleCache cache;
  cache.theta.resize(n);
  cache.alpha.resize(n);
  std::vector<Vec3> side(n);
  for (std::size_t i = 0; i < n; ++i) {
    cache.theta[i] = angle_between(x, ring[i]);
    if (cache.theta[i] <= tol.angle || cache.theta[i] >= kPi - tol.angle) {
      throw GeometryError(ErrorCode::AngleDegenerate, "x is aligned with vertex " + std::to_string(i + 1));
    }
    side[i] = cross(x, ring[i]);
    side[i] = side[i] / norm(side[i]);
  }
  for (std::size_t i = 0; i < n; ++i) cache.alpha[i] = angle_between(side[i], side[(i + 1) % n]);
  return cache;
}

ClosedFormWeights closed_form_mv_weights(std::span<const UnitVector> ring, const UnitVector& x,
                                         const Tolerances& tol) {
  const std::size_t n = ring.size();
  const AngleCache cache = angles(ring, x, tol);

  std::vector<double> half_tan(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (triple_product(x, ring[i], ring[(i + 1) % n]) <= tol.geom) {
      throw GeometryError(ErrorCode::KernelViolation,
                          "edge " + std::to_string(i + 1) + " is not seen anti-clockwise from x");
    }
    const double alpha = cache.alpha[i];
    if (alpha >= kPi - tol.angle) {
      throw GeometryError(ErrorCode::AlphaNearPi, "alpha_" + std::to_string(i + 1) + " is within tolerance of pi");
    }
    half_tan[i] = std::sin(alpha) / (1.0 + std::cos(alpha));
  }

  ClosedFormWeights out{std::vector<double>(n), 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double t = half_tan[i] + half_tan[(i + n - 1) % n];
    const double theta = cache.theta[i];
    out.omega[i] = kPi * t / (2.0 * std::sin(theta));
    out.denominator += std::cos(theta) / std::sin(theta) * t;
  }
  out.denominator *= kPi / 2.0;
  return out;
}

std::vector<double> quotient_from_origin_coords(const Coordinates3D& phi, std::size_t n, double& denominator,
                                                const Tolerances& tol) {
  denominator = phi.phi[n + 1] - phi.phi[n];
  if (!(denominator > tol.denominator)) {
    throw GeometryError(ErrorCode::NonPositiveDenominator,
                        "phi_{n+2}(0) - phi_{n+1}(0) = " + std::to_string(denominator));
  }
  std::vector<double> psi(phi.phi.begin(), phi.phi.begin() + static_cast<std::ptrdiff_t>(n));
  for (auto& v : psi) v /= denominator;
  return psi;
}

namespace {

CoordinateVector interior_through_q(std::span<const UnitVector> ring, const UnitVector& x, Backend3D backend,
                                    const EvalOptions& options, PointLocation loc) {
  const PolyhedronQ q = build_q(ring, x, options.tol);
  if (!q.kernel_ok) {
    throw GeometryError(ErrorCode::KernelViolation, "origin is not strictly inside every face plane of Q");
  }
  // Wachspress validity is gated on the polygon's convexity by the callers;
  // the fan Q itself may have reflex dihedrals along the edges (x, v_i).
  const Coordinates3D phi = coords_at_origin(q, backend, options.tol, WachspressOptions{.require_convex = false});
  CoordinateVector out;
  out.method = backend == Backend3D::MeanValue ? Method::NewMV : Method::NewWC;
  out.location = loc;
  out.values = quotient_from_origin_coords(phi, ring.size(), out.denominator, options.tol);
  return out;
}

}  // namespace

CoordinateVector spherical_coords(const SphericalPolygon& p, const UnitVector& x, Backend3D backend,
                                  const EvalOptions& options) {
  if (options.extended) return spherical_coords_extended(p.vertices(), x, backend, options);

  const PointLocation loc = locate_point(p, x, options.tol);
  if (std::holds_alternative<Exterior>(loc)) {
    throw GeometryError(ErrorCode::ExteriorPoint, "point lies outside the polygon");
  }
  if (backend == Backend3D::Wachspress && !p.convex()) {
    throw GeometryError(ErrorCode::NotConvexForWC, "Wachspress coordinates need a convex polygon");
  }
  CoordinateVector out;
  out.method = backend == Backend3D::MeanValue ? Method::NewMV : Method::NewWC;
  out.location = loc;
  if (boundary_coords(p.vertices(), x, loc, options, out)) return out;
  return interior_through_q(p.vertices(), x, backend, options, loc);
}

CoordinateVector spherical_coords_closed_form(const SphericalPolygon& p, const UnitVector& x,
                                              const EvalOptions& options) {
  const PointLocation loc = locate_point(p, x, options.tol);
  if (std::holds_alternative<Exterior>(loc)) {
    throw GeometryError(ErrorCode::ExteriorPoint, "point lies outside the polygon");
  }
  CoordinateVector out;
  out.method = Method::NewMVClosed;
  out.location = loc;
  if (boundary_coords(p.vertices(), x, loc, options, out)) return out;

  const ClosedFormWeights cf = closed_form_mv_weights(p.vertices(), x, options.tol);
  if (!(cf.denominator > options.tol.denominator)) {
    throw GeometryError(ErrorCode::NonPositiveDenominator,
                        "closed-form denominator = " + std::to_string(cf.denominator));
  }
  out.denominator = cf.denominator;
  out.values = cf.omega;
  for (auto& v : out.values) v /= cf.denominator;
  return out;
}

CoordinateVector spherical_coords_extended(std::span<const UnitVector> ring, const UnitVector& x, Backend3D backend,
                                           const EvalOptions& options) {
  if (backend == Backend3D::Wachspress && !ring_is_convex(ring, options.tol)) {
    throw GeometryError(ErrorCode::NotConvexForWC, "Wachspress coordinates need a convex polygon");
  }
  const PointLocation loc = locate_point(ring, x, options.tol);
  CoordinateVector out;
  out.method = backend == Backend3D::MeanValue ? Method::NewMV : Method::NewWC;
  out.location = loc;
  if (boundary_coords(ring, x, loc, options, out)) return out;
  return interior_through_q(ring, x, backend, options, loc);
}

}  // namespace sphbary
