#include "sphbary/coords3d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "sphbary/error.hpp"

namespace sphbary {

PolyhedronQ build_q(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (angle_between(x, ring[i]) <= tol.angle || angle_between(-x, ring[i]) <= tol.angle) {
      throw GeometryError(ErrorCode::PointOnVertexOrAntipode,
                          "x or -x coincides with vertex " + std::to_string(i + 1));
    }
  }

  PolyhedronQ q;
  q.n = n;
  q.mesh.vertices.reserve(n + 2);
  for (const auto& v : ring) q.mesh.vertices.push_back(v);
  q.mesh.vertices.push_back(x);
  q.mesh.vertices.push_back(-x);

  q.mesh.faces.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) q.mesh.faces.push_back({n, i, (i + 1) % n});
  for (std::size_t i = 0; i < n; ++i) q.mesh.faces.push_back({n + 1, (i + 1) % n, i});

  q.kernel_ok = min_face_offset(q.mesh, Vec3{}) > tol.geom;
  return q;
}

PolyhedronQ build_q(const SphericalPolygon& p, const UnitVector& x, const Tolerances& tol) {
  const PointLocation loc = locate_point(p, x, tol);
  if (!std::holds_alternative<Interior>(loc)) {
    throw GeometryError(ErrorCode::NotInterior, "point is " + std::string(location_name(loc)));
  }
  return build_q(p.vertices(), x, tol);
}

Vec3 face_normal(const TriangleMesh& mesh, std::size_t f) {
  const auto& [i, j, k] = mesh.faces[f];
  const Vec3& a = mesh.vertices[i];
  const Vec3 n = cross(mesh.vertices[j] - a, mesh.vertices[k] - a);
  return n / norm(n);
}

double min_face_offset(const TriangleMesh& mesh, const Vec3& at) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    m = std::min(m, dot(face_normal(mesh, f), mesh.vertices[mesh.faces[f][0]] - at));
  }
  return m;
}

bool is_convex(const TriangleMesh& mesh, const Tolerances& tol) {
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Vec3 nf = face_normal(mesh, f);
    const Vec3& a = mesh.vertices[mesh.faces[f][0]];
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
      if (dot(nf, mesh.vertices[v] - a) > tol.geom) return false;
    }
  }
  return true;
}

bool is_closed_manifold(const TriangleMesh& mesh) {
  std::map<std::pair<std::size_t, std::size_t>, int> directed;
  for (const auto& f : mesh.faces) {
    for (int e = 0; e < 3; ++e) ++directed[{f[e], f[(e + 1) % 3]}];
  }
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    const auto rev = directed.find({edge.second, edge.first});
    if (rev == directed.end() || rev->second != 1) return false;
  }
  return true;
}

std::vector<std::size_t> faces_around_vertex(const TriangleMesh& mesh, std::size_t v) {
  // Rotate each incident face to (v, a, b). Around v the next face
  // anti-clockwise is the one that starts with (v, b, ...).
  struct Wedge {
    std::size_t first;
    std::size_t second;
    std::size_t face;
  };
  std::vector<Wedge> wedges;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const auto& t = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      if (t[k] == v) wedges.push_back({t[(k + 1) % 3], t[(k + 2) % 3], f});
    }
  }
  std::vector<std::size_t> order;
  if (wedges.empty()) return order;
  std::size_t next = wedges.front().first;
  for (std::size_t step = 0; step < wedges.size(); ++step) {
    const auto it = std::find_if(wedges.begin(), wedges.end(), [&](const Wedge& w) { return w.first == next; });
    if (it == wedges.end()) break;
    order.push_back(it->face);
    next = it->second;
  }
  return order;
}

Weights3D mv_weights(const TriangleMesh& mesh, const Vec3& at, const Tolerances& tol) {
  if (!(min_face_offset(mesh, at) > tol.geom)) {
    throw GeometryError(ErrorCode::KernelViolation, "evaluation point is not strictly inside every face plane");
  }

  const std::size_t nv = mesh.vertices.size();
  std::vector<Vec3> e(nv);
  std::vector<double> dist(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    const Vec3 d = mesh.vertices[i] - at;
    dist[i] = norm(d);
    e[i] = d / dist[i];
  }

  auto unit_cross = [&](std::size_t r, std::size_t s) {
    const Vec3 c = cross(e[r], e[s]);
    const double len = norm(c);
    if (len <= tol.triangle) {
      throw GeometryError(ErrorCode::DegenerateTriangle, "vanishing cross product within a face");
    }
    return c / len;
  };

  Weights3D out{std::vector<double>(nv, 0.0), Backend3D::MeanValue};
  for (const auto& t : mesh.faces) {
    // Per face (i, j, k): beta_rs is the angle subtended at `at` by the edge
    // (r, s), n_rs the unit normal of the plane through `at`, r and s.
    const std::array<std::size_t, 3> idx = t;
    std::array<double, 3> beta{};
    std::array<Vec3, 3> nrm{};
    for (int m = 0; m < 3; ++m) {
      const std::size_t r = idx[m], s = idx[(m + 1) % 3];
      beta[m] = angle_between(e[r], e[s]);
      nrm[m] = unit_cross(r, s);
    }
    // Edge m joins corners m and m+1, so the edge opposite corner m is m+1.
    for (int m = 0; m < 3; ++m) {
      const int ij = m, jk = (m + 1) % 3, ki = (m + 2) % 3;
      const double denom = 2.0 * dot(e[idx[m]], nrm[jk]);
      if (std::abs(denom) <= tol.triangle) {
        throw GeometryError(ErrorCode::DegenerateTriangle, "mean value denominator vanishes");
      }
      const double mu =
          (beta[jk] + beta[ij] * dot(nrm[ij], nrm[jk]) + beta[ki] * dot(nrm[ki], nrm[jk])) / denom;
      out.w[idx[m]] += mu / dist[idx[m]];
    }
  }
  return out;
}

Weights3D mv_weights(const PolyhedronQ& q, const Vec3& at, const Tolerances& tol) {
  return mv_weights(q.mesh, at, tol);
}

Weights3D wachspress_weights(const TriangleMesh& mesh, const Vec3& at, const Tolerances& tol,
                             WachspressOptions options) {
  if (options.require_convex && !is_convex(mesh, tol)) {
    throw GeometryError(ErrorCode::NotConvex, "polyhedron has a reflex dihedral angle");
  }

  std::vector<Vec3> dual(mesh.faces.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Vec3 nf = face_normal(mesh, f);
    const double h = dot(nf, mesh.vertices[mesh.faces[f][0]] - at);
    if (h <= tol.face_offset) {
      throw GeometryError(ErrorCode::FaceThroughPoint, "face " + std::to_string(f) + " plane passes through the point");
    }
    dual[f] = nf / h;
  }

  Weights3D out{std::vector<double>(mesh.vertices.size(), 0.0), Backend3D::Wachspress};
  for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
    const auto ring = faces_around_vertex(mesh, v);
    for (std::size_t j = 1; j + 1 < ring.size(); ++j) {
      out.w[v] += det3(dual[ring[0]], dual[ring[j]], dual[ring[j + 1]]);
    }
  }
  return out;
}

Weights3D wachspress_weights(const PolyhedronQ& q, const Vec3& at, const Tolerances& tol, WachspressOptions options) {
  return wachspress_weights(q.mesh, at, tol, options);
}

Coordinates3D normalize_weights(const Weights3D& weights) {
  const double total = std::accumulate(weights.w.begin(), weights.w.end(), 0.0);
  Coordinates3D out{weights.w, weights.backend};
  for (auto& v : out.phi) v /= total;
  return out;
}

Coordinates3D coords_at_origin(const PolyhedronQ& q, Backend3D backend, const Tolerances& tol,
                               WachspressOptions options) {
  if (backend == Backend3D::MeanValue) return normalize_weights(mv_weights(q, Vec3{}, tol));
  return normalize_weights(wachspress_weights(q, Vec3{}, tol, options));
}

}  // namespace sphbary
