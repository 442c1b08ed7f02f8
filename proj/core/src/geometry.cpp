#include "sphbary/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "sphbary/error.hpp"

namespace sphbary {

UnitVector normalize(const Vec3& v, const Tolerances& tol) {
  const double len = norm(v);
  if (!(len > tol.zero_norm)) {
    throw GeometryError(ErrorCode::ZeroVector, "cannot normalize a vector of norm " + std::to_string(len));
  }
  return UnitVector(v / len);
}

double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

double triple_product(const Vec3& a, const Vec3& b, const Vec3& c) { return det3(a, b, c); }

double signed_turn(const Vec3& x, const Vec3& a, const Vec3& b) {
  // (x × a) × (x × b) = det(x, a, b) x for |x| = 1, and
  // <x × a, x × b> = <a, b> - <x, a><x, b>.
  return std::atan2(det3(x, a, b), dot(a, b) - dot(x, a) * dot(x, b));
}

double ring_winding(std::span<const UnitVector> ring, const Vec3& x) {
  double total = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    total += signed_turn(x, ring[i], ring[(i + 1) % n]);
  }
  return total;
}

const UnitVector& SphericalPolygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

namespace {

double min_dot(std::span<const UnitVector> points, const Vec3& w) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : points) m = std::min(m, dot(w, p));
  return m;
}

}  // namespace

bool find_hemisphere_witness(std::span<const UnitVector> points, Vec3& witness, const Tolerances& tol) {
  Vec3 sum;
  for (const auto& p : points) sum += p.vec();
  const double sum_len = norm(sum);
  if (sum_len > tol.zero_norm) {
    const Vec3 w = sum / sum_len;
    if (min_dot(points, w) > tol.geom) {
      witness = w;
      return true;
    }
  }

  // The points lie in an open hemisphere iff the origin is outside their
  // convex hull, in which case some hull facet plane separates the two. Keep
  // the facet normal with the largest margin.
  const std::size_t n = points.size();
  double best_margin = tol.geom;
  bool found = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 normal = cross(points[j].vec() - points[i].vec(), points[k].vec() - points[i].vec());
        const double len = norm(normal);
        if (len <= tol.zero_norm) continue;
        normal = normal / len;
        const double offset = dot(normal, points[i]);
        if (offset < 0.0) normal = -normal;
        const double margin = std::abs(offset);
        if (margin <= best_margin) continue;
        // Every point must be on the far side of the facet plane.
        bool separating = true;
        for (const auto& p : points) {
          if (dot(normal, p) < margin - tol.geom) {
            separating = false;
            break;
          }
        }
        if (separating && min_dot(points, normal) > tol.geom) {
          best_margin = margin;
          witness = normal;
          found = true;
        }
      }
    }
  }
  return found;
}

double gnomonic_signed_area(std::span<const UnitVector> ring, const UnitVector& center) {
  // Orthonormal (b1, b2) with b1 × b2 = center.
  const Vec3& c = center;
  const Vec3 axis = std::abs(c.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 b1 = cross(axis, c) / norm(cross(axis, c));
  const Vec3 b2 = cross(c, b1);
  double area = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& p = ring[i];
    const Vec3& q = ring[(i + 1) % n];
    const double dp = dot(p, c);
    const double dq = dot(q, c);
    const double px = dot(p, b1) / dp, py = dot(p, b2) / dp;
    const double qx = dot(q, b1) / dq, qy = dot(q, b2) / dq;
    area += px * qy - py * qx;
  }
  return 0.5 * area;
}

std::vector<UnitVector> normalize_ring(std::span<const Vec3> raw_vertices, const Tolerances& tol) {
  if (raw_vertices.size() < 3) {
    throw GeometryError(ErrorCode::TooFewVertices, std::to_string(raw_vertices.size()) + " vertices");
  }
  std::vector<UnitVector> ring;
  ring.reserve(raw_vertices.size());
  for (const auto& v : raw_vertices) ring.push_back(normalize(v, tol));
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(dot(ring[i], ring[(i + 1) % n])) >= 1.0 - tol.edge) {
      throw GeometryError(ErrorCode::DegenerateEdge,
                          "vertices " + std::to_string(i + 1) + " and " + std::to_string((i + 1) % n + 1) +
                              " are equal or antipodal");
    }
  }
  return ring;
}

namespace {

// Two arcs inside a common open hemisphere cross iff each separates the
// endpoints of the other.
bool arcs_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, double eps) {
  const double c_side = triple_product(a, b, c), d_side = triple_product(a, b, d);
  const double a_side = triple_product(c, d, a), b_side = triple_product(c, d, b);
  const bool split_cd = (c_side > eps && d_side < -eps) || (c_side < -eps && d_side > eps);
  const bool split_ab = (a_side > eps && b_side < -eps) || (a_side < -eps && b_side > eps);
  return split_cd && split_ab;
}

std::optional<std::pair<std::size_t, std::size_t>> find_crossing(std::span<const UnitVector> ring,
                                                                 const Tolerances& tol) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      if (i == 0 && k == n - 1) continue;
      if (arcs_cross(ring[i], ring[(i + 1) % n], ring[k], ring[(k + 1) % n], tol.geom)) return std::pair{i, k};
    }
  }
  return std::nullopt;
}

}  // namespace

SphericalPolygon validate_polygon(std::span<const Vec3> raw_vertices, const Tolerances& tol) {
  if (raw_vertices.size() < 3) {
    throw GeometryError(ErrorCode::TooFewVertices, std::to_string(raw_vertices.size()) + " vertices");
  }
  std::vector<UnitVector> ring;
  ring.reserve(raw_vertices.size());
  for (const auto& v : raw_vertices) ring.push_back(normalize(v, tol));

  Vec3 w;
  if (!find_hemisphere_witness(ring, w, tol)) {
    throw GeometryError(ErrorCode::NotInHemisphere, "no open hemisphere contains all vertices");
  }
  const UnitVector witness = normalize(w, tol);

  // Edge checks come after the hemisphere test so an antipodal pair reports
  // NotInHemisphere.
  ring = normalize_ring(raw_vertices, tol);
  if (const auto crossing = find_crossing(ring, tol)) {
    throw GeometryError(ErrorCode::SelfIntersecting, "edges " + std::to_string(crossing->first + 1) + " and " +
                                                         std::to_string(crossing->second + 1) + " cross");
  }

  const double area = gnomonic_signed_area(ring, witness);
  if (std::abs(area) <= tol.geom) {
    throw GeometryError(ErrorCode::DegenerateEdge, "ring encloses no area");
  }
  if (area < 0.0) {
    throw GeometryError(ErrorCode::WrongOrientation, "ring winds clockwise seen from outside (winding -2pi)");
  }

  bool convex = true;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (triple_product(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) < -tol.convexity) {
      convex = false;
      break;
    }
  }
  return SphericalPolygon(std::move(ring), witness, convex);
}

std::string_view location_name(const PointLocation& loc) {
  struct Visitor {
    std::string_view operator()(const Interior&) const { return "Interior"; }
    std::string_view operator()(const OnEdge&) const { return "OnEdge"; }
    std::string_view operator()(const OnVertex&) const { return "OnVertex"; }
    std::string_view operator()(const Exterior&) const { return "Exterior"; }
  };
  return std::visit(Visitor{}, loc);
}

EdgeCoefficients solve_edge_gram(const Vec3& u, const Vec3& v, const Vec3& x) {
  // [ <u,u> <u,v> ] [a]   [<x,u>]
  // [ <u,v> <v,v> ] [b] = [<x,v>]
  const double uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
  const double xu = dot(x, u), xv = dot(x, v);
  const double det = uu * vv - uv * uv;
  return {(xu * vv - uv * xv) / det, (uu * xv - uv * xu) / det};
}

PointLocation locate_point(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol) {
  const std::size_t n = ring.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (angle_between(x, ring[j]) <= tol.angle) return OnVertex{j};
  }
  for (std::size_t j = 0; j < n; ++j) {
    const UnitVector& u = ring[j];
    const UnitVector& v = ring[(j + 1) % n];
    if (std::abs(triple_product(u, v, x)) <= tol.geom) {
      const auto [a, b] = solve_edge_gram(u, v, x);
      if (a > 0.0 && b > 0.0) return OnEdge{j, a, b};
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (angle_between(x, -ring[j]) <= tol.angle) return Exterior{};
  }
  const double turns = ring_winding(ring, x) / (2.0 * std::numbers::pi);
  return std::lround(turns) == 1 ? PointLocation{Interior{}} : PointLocation{Exterior{}};
}

}  // namespace sphbary
