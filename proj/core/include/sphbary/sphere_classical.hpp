#pragma once

#include <array>
#include <span>
#include <vector>

#include "sphbary/coordinates.hpp"

namespace sphbary {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Gnomonic image of a ring on the tangent plane at x: v_i / <v_i, x> =
/// x + points2d[i].x * b1 + points2d[i].y * b2.
struct TangentPolygon {
  Vec3 b1;
  Vec3 b2;
  std::vector<Point2> points2d;
  std::vector<double> dots;
};

/// Orthonormal tangent basis at x, built by Gram-Schmidt against the axis
/// where |x| has its smallest component; b1 × b2 = x.
std::array<Vec3, 2> tangent_basis(const UnitVector& x);

/// Throws ProjectionUndefined when some <v_i, x> <= tol.projection.
TangentPolygon gnomonic_project(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol = {});

/// Mean value coordinates of the planar origin, normalized to sum 1.
/// Throws OriginOnBoundary or OriginOutside.
std::vector<double> planar_mv(std::span<const Point2> polygon, const Tolerances& tol = {});

/// Wachspress coordinates of the planar origin, normalized to sum 1.
/// Throws NotConvex, OriginOnBoundary or OriginOutside.
std::vector<double> planar_wachspress(std::span<const Point2> polygon, const Tolerances& tol = {});

inline std::vector<double> planar_mv(const TangentPolygon& t, const Tolerances& tol = {}) {
  return planar_mv(t.points2d, tol);
}
inline std::vector<double> planar_wachspress(const TangentPolygon& t, const Tolerances& tol = {}) {
  return planar_wachspress(t.points2d, tol);
}

enum class PlanarBackend { MeanValue, Wachspress };

/// b_i = lambda_i / <v_i, x> with lambda the planar coordinates of the
/// tangent point in the gnomonic image.
CoordinateVector spherical_coords_classical(const SphericalPolygon& p, const UnitVector& x, PlanarBackend backend,
                                            const EvalOptions& options = {});

}  // namespace sphbary
