#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "sphbary/tolerances.hpp"
#include "sphbary/vec3.hpp"

namespace sphbary {

/// A direction on the unit sphere. Only normalize() and negation produce one,
/// so every instance satisfies | |v| - 1 | <= 1e-12.
class UnitVector {
 public:
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }
  const Vec3& vec() const { return v_; }
  operator const Vec3&() const { return v_; }

  UnitVector operator-() const { return UnitVector(-v_); }
  friend bool operator==(const UnitVector&, const UnitVector&) = default;

 private:
  explicit UnitVector(const Vec3& v) : v_(v) {}
  Vec3 v_;

  friend UnitVector normalize(const Vec3& v, const Tolerances& tol);
};

/// Throws GeometryError(ZeroVector) when |v| <= tol.zero_norm.
UnitVector normalize(const Vec3& v, const Tolerances& tol = {});

/// Principal angle in [0, pi], via atan2(|a x b|, <a, b>).
double angle_between(const Vec3& a, const Vec3& b);

/// <a, b x c>
double triple_product(const Vec3& a, const Vec3& b, const Vec3& c);

/// Signed angle at x from the plane (x, a) to the plane (x, b), positive when
/// a -> b turns anti-clockwise seen from outside the sphere at x.
double signed_turn(const Vec3& x, const Vec3& a, const Vec3& b);

/// Sum of signed_turn over the closed ring as seen from x. A simple ring in
/// an open hemisphere gives +2pi for points it encloses anti-clockwise, -2pi
/// for their antipodes, and 0 elsewhere.
double ring_winding(std::span<const UnitVector> ring, const Vec3& x);

/// A validated spherical polygon: n >= 3 anti-clockwise vertices in an open
/// hemisphere with no equal or antipodal consecutive pair. Indexing is cyclic.
class SphericalPolygon {
 public:
  std::size_t size() const { return vertices_.size(); }
  const UnitVector& vertex(std::ptrdiff_t i) const;
  std::span<const UnitVector> vertices() const { return vertices_; }
  const UnitVector& witness() const { return witness_; }
  bool convex() const { return convex_; }

 private:
  SphericalPolygon(std::vector<UnitVector> vertices, UnitVector witness, bool convex)
      : vertices_(std::move(vertices)), witness_(witness), convex_(convex) {}

  std::vector<UnitVector> vertices_;
  UnitVector witness_;
  bool convex_;

  friend SphericalPolygon validate_polygon(std::span<const Vec3>, const Tolerances&);
};

/// Normalizes and checks the ring; throws TooFewVertices, ZeroVector,
/// NotInHemisphere, DegenerateEdge or WrongOrientation.
SphericalPolygon validate_polygon(std::span<const Vec3> raw_vertices, const Tolerances& tol = {});

/// Normalizes a ring without any hemisphere or orientation checks. Used by
/// the extended evaluation mode.
std::vector<UnitVector> normalize_ring(std::span<const Vec3> raw_vertices, const Tolerances& tol = {});

/// Searches for w with <w, v_i> > tol.geom for all i. Returns false when the
/// points admit no open hemisphere.
bool find_hemisphere_witness(std::span<const UnitVector> points, Vec3& witness,
                             const Tolerances& tol = {});

/// Signed area of the gnomonic image of the ring on the tangent plane at
/// `center`. Positive for anti-clockwise rings seen from outside.
double gnomonic_signed_area(std::span<const UnitVector> ring, const UnitVector& center);

struct Interior {
  friend bool operator==(const Interior&, const Interior&) = default;
};
struct Exterior {
  friend bool operator==(const Exterior&, const Exterior&) = default;
};
struct OnVertex {
  std::size_t index;
  friend bool operator==(const OnVertex&, const OnVertex&) = default;
};
/// x = a * v_edge + b * v_{edge+1}, a, b > 0.
struct OnEdge {
  std::size_t edge;
  double a;
  double b;
};

using PointLocation = std::variant<Interior, OnEdge, OnVertex, Exterior>;

std::string_view location_name(const PointLocation& loc);

PointLocation locate_point(std::span<const UnitVector> ring, const UnitVector& x,
                           const Tolerances& tol = {});

inline PointLocation locate_point(const SphericalPolygon& p, const UnitVector& x,
                                  const Tolerances& tol = {}) {
  return locate_point(p.vertices(), x, tol);
}

/// Coefficients (a, b) with a*u + b*v the projection of x onto span(u, v).
struct EdgeCoefficients {
  double a;
  double b;
};
EdgeCoefficients solve_edge_gram(const Vec3& u, const Vec3& v, const Vec3& x);

}  // namespace sphbary
