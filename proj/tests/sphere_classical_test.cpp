#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sphbary/error.hpp"
#include "sphbary/sphere_classical.hpp"
#include "test_support.hpp"

namespace sphbary {
namespace {

using std::numbers::pi;
using testing::Gen;
using testing::octant;
using testing::polar;
using testing::unit;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorCode::ParseError;
}

// Areal coordinates of the origin in a planar triangle by a 2x2 solve.
std::array<double, 3> planar_barycentric(const Point2& a, const Point2& b, const Point2& c) {
  const double m00 = a.x - c.x, m01 = b.x - c.x, m10 = a.y - c.y, m11 = b.y - c.y;
  const double det = m00 * m11 - m01 * m10;
  const double l0 = (-c.x * m11 + c.y * m01) / det;
  const double l1 = (-m00 * c.y + m10 * c.x) / det;
  return {l0, l1, 1.0 - l0 - l1};
}

TEST(TangentBasis, Orthonormal) {
  Gen gen(3);
  for (int k = 0; k < 100; ++k) {
    const UnitVector x = normalize(gen.on_sphere());
    const auto [b1, b2] = tangent_basis(x);
    EXPECT_NEAR(norm(b1), 1.0, 1e-15);
    EXPECT_NEAR(norm(b2), 1.0, 1e-15);
    EXPECT_NEAR(dot(b1, b2), 0.0, 1e-15);
    EXPECT_NEAR(dot(b1, x), 0.0, 1e-15);
    EXPECT_NEAR(det3(b1, b2, x), 1.0, 1e-14);
  }
}

TEST(Gnomonic, RadialDistanceIsTanTheta) {
  const std::vector<UnitVector> ring{normalize(polar(pi / 4, 0.0)), normalize(polar(pi / 4, 2.0)),
                                     normalize(polar(pi / 4, 4.0))};
  const TangentPolygon t = gnomonic_project(ring, unit(0, 0, 1));
  for (const auto& u : t.points2d) EXPECT_NEAR(std::hypot(u.x, u.y), 1.0, 1e-15);
}

TEST(Gnomonic, ReconstructsVertices) {
  const SphericalPolygon p = validate_polygon(octant());
  const UnitVector x = unit(1, 1, 1);
  const TangentPolygon t = gnomonic_project(p.vertices(), x);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(std::hypot(t.points2d[i].x, t.points2d[i].y), std::sqrt(2.0), 1e-14);
    const Vec3 lifted = x.vec() + t.points2d[i].x * t.b1 + t.points2d[i].y * t.b2;
    EXPECT_LE(norm(lifted - p.vertex(static_cast<std::ptrdiff_t>(i)).vec() / t.dots[i]), 1e-10);
  }
}

TEST(Gnomonic, UndefinedAtRightAngle) {
  const std::vector<UnitVector> ring{unit(1, 0, 0), unit(0, 1, 0), unit(0, 0, 1)};
  EXPECT_EQ(code_of([&] { gnomonic_project(ring, unit(0, 0, 1)); }), ErrorCode::ProjectionUndefined);
}

TEST(PlanarMv, SymmetricPolygons) {
  const std::vector<Point2> square{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (double l : planar_mv(square)) EXPECT_NEAR(l, 0.25, 1e-15);
  for (double l : planar_wachspress(square)) EXPECT_NEAR(l, 0.25, 1e-15);
  for (int n : {5, 7, 12}) {
    std::vector<Point2> ngon;
    for (int k = 0; k < n; ++k) ngon.push_back({std::cos(2 * pi * k / n), std::sin(2 * pi * k / n)});
    for (double l : planar_mv(ngon)) EXPECT_NEAR(l, 1.0 / n, 1e-14);
    for (double l : planar_wachspress(ngon)) EXPECT_NEAR(l, 1.0 / n, 1e-14);
  }
}

TEST(PlanarMv, TrianglesMatchArealCoordinates) {
  Gen gen(8);
  for (int k = 0; k < 100; ++k) {
    // Random triangle around the origin: three points at spread-out angles.
    const double a0 = gen.uniform(0, 2 * pi);
    std::vector<Point2> tri;
    for (int i = 0; i < 3; ++i) {
      const double a = a0 + i * 2 * pi / 3 + gen.uniform(-0.5, 0.5);
      const double r = gen.uniform(0.3, 3.0);
      tri.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const auto expect = planar_barycentric(tri[0], tri[1], tri[2]);
    const auto mv = planar_mv(tri);
    const auto wc = planar_wachspress(tri);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(mv[i], expect[i], 1e-12);
      EXPECT_NEAR(wc[i], expect[i], 1e-12);
    }
  }
}

TEST(PlanarMv, Errors) {
  const std::vector<Point2> touching{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(code_of([&] { planar_mv(touching); }), ErrorCode::OriginOnBoundary);
  const std::vector<Point2> on_edge{{-1, 0}, {1, 0}, {0, 1}};
  EXPECT_EQ(code_of([&] { planar_mv(on_edge); }), ErrorCode::OriginOnBoundary);
  const std::vector<Point2> away{{1, 1}, {2, 1}, {1, 2}};
  EXPECT_EQ(code_of([&] { planar_mv(away); }), ErrorCode::OriginOutside);
  EXPECT_EQ(code_of([&] { planar_wachspress(away); }), ErrorCode::OriginOutside);
}

TEST(PlanarWachspress, RejectsNonConvex) {
  const std::vector<Point2> dart{{1, 0}, {0, 1}, {-0.2, 0}, {0, -1}};
  const std::vector<Point2> arrow{{2, 0}, {-1, 1}, {-0.3, 0}, {-1, -1}};
  EXPECT_EQ(code_of([&] { planar_wachspress(arrow); }), ErrorCode::NotConvex);
  EXPECT_NO_THROW(planar_mv(arrow));
  EXPECT_NO_THROW(planar_wachspress(dart));
}

TEST(ClassicalCoords, OctantCenterBothBackends) {
  const SphericalPolygon p = validate_polygon(octant());
  for (PlanarBackend b : {PlanarBackend::MeanValue, PlanarBackend::Wachspress}) {
    const CoordinateVector c = spherical_coords_classical(p, unit(1, 1, 1), b);
    for (double v : c.values) EXPECT_NEAR(v, 1.0 / std::sqrt(3.0), 1e-14);
    EXPECT_GE(c.sum(), 1.0);
  }
}

TEST(ClassicalCoords, NoContinuousExtension) {
  const SphericalPolygon p = validate_polygon(octant());
  EXPECT_EQ(code_of([&] { spherical_coords_classical(p, unit(1, 0, 0), PlanarBackend::MeanValue); }),
            ErrorCode::ProjectionUndefined);
  EXPECT_EQ(code_of([&] { spherical_coords_classical(p, unit(1, 1, 0), PlanarBackend::MeanValue); }),
            ErrorCode::ProjectionUndefined);
  EXPECT_EQ(code_of([&] { spherical_coords_classical(p, unit(-1, -1, -1), PlanarBackend::MeanValue); }),
            ErrorCode::ExteriorPoint);

  std::vector<Vec3> cap;
  for (int k = 0; k < 5; ++k) cap.push_back(polar(0.4, k * 2 * pi / 5));
  const SphericalPolygon q = validate_polygon(cap);
  EXPECT_EQ(code_of([&] { spherical_coords_classical(q, q.vertex(2), PlanarBackend::Wachspress); }),
            ErrorCode::OriginOnBoundary);
}

TEST(ClassicalCoords, ExtendedSquareFails) {
  const SphericalPolygon p = testing::load_polygon("extended_square.json");
  EXPECT_EQ(code_of([&] { spherical_coords_classical(p, normalize(polar(pi / 3, pi)), PlanarBackend::MeanValue); }),
            ErrorCode::ProjectionUndefined);
}

}  // namespace
}  // namespace sphbary
