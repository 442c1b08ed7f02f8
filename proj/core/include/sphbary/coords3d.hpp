#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "sphbary/geometry.hpp"

namespace sphbary {

/// Closed triangulated surface. Faces are vertex-index triples oriented
/// anti-clockwise seen from outside.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> faces;
};

/// The fan polyhedron [v_1, ..., v_n, x, -x]. Vertex n is x and vertex n + 1
/// is -x (zero based). Faces 0..n-1 are the upper triangles (x, v_i, v_{i+1}),
/// faces n..2n-1 the lower triangles (-x, v_{i+1}, v_i).
struct PolyhedronQ {
  TriangleMesh mesh;
  std::size_t n = 0;
  /// The origin lies strictly inside every face plane.
  bool kernel_ok = false;

  std::size_t apex_index() const { return n; }
  std::size_t antipode_index() const { return n + 1; }
};

enum class Backend3D { MeanValue, Wachspress };

/// Unnormalized weights indexed like the mesh vertices.
struct Weights3D {
  std::vector<double> w;
  Backend3D backend;
};

/// Normalized coordinates phi_i = w_i / sum(w).
struct Coordinates3D {
  std::vector<double> phi;
  Backend3D backend;
};

/// Builds Q without checking that x lies inside the ring. Throws
/// PointOnVertexOrAntipode when x or -x is within tol.angle of a vertex.
PolyhedronQ build_q(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol = {});

/// As above, and additionally requires locate_point(p, x) == Interior.
PolyhedronQ build_q(const SphericalPolygon& p, const UnitVector& x, const Tolerances& tol = {});

/// Outward unit normal of face f.
Vec3 face_normal(const TriangleMesh& mesh, std::size_t f);

/// min over faces of <n_f, y_f - at>; positive iff `at` is strictly inside
/// every face plane.
double min_face_offset(const TriangleMesh& mesh, const Vec3& at);

bool is_convex(const TriangleMesh& mesh, const Tolerances& tol = {});

/// Every directed edge appears exactly once and its reverse exactly once.
bool is_closed_manifold(const TriangleMesh& mesh);

/// Faces incident to vertex v, ordered anti-clockwise around v seen from
/// outside.
std::vector<std::size_t> faces_around_vertex(const TriangleMesh& mesh, std::size_t v);

/// 3D mean value weights: w_p = (1/|p - at|) * sum over faces T at p of
/// mu_{p,T}. Throws KernelViolation when `at` is not strictly inside every
/// face plane and DegenerateTriangle on vanishing cross products or
/// denominators.
Weights3D mv_weights(const TriangleMesh& mesh, const Vec3& at = {}, const Tolerances& tol = {});
Weights3D mv_weights(const PolyhedronQ& q, const Vec3& at = {}, const Tolerances& tol = {});

struct WachspressOptions {
  /// Reject meshes with a reflex dihedral angle (NotConvex).
  bool require_convex = true;
};

/// Polar-dual Wachspress weights: with p_f = n_f / <n_f, y_f - at>, the weight
/// of vertex p is the signed volume of the cone over its dual polygon,
/// sum_j det(p_{f_1}, p_{f_j}, p_{f_{j+1}}). Throws FaceThroughPoint and,
/// when options.require_convex, NotConvex.
Weights3D wachspress_weights(const TriangleMesh& mesh, const Vec3& at = {}, const Tolerances& tol = {},
                             WachspressOptions options = {});
Weights3D wachspress_weights(const PolyhedronQ& q, const Vec3& at = {}, const Tolerances& tol = {},
                             WachspressOptions options = {});

Coordinates3D normalize_weights(const Weights3D& weights);

/// phi_i(0) for the chosen backend.
Coordinates3D coords_at_origin(const PolyhedronQ& q, Backend3D backend, const Tolerances& tol = {},
                               WachspressOptions options = {});

}  // namespace sphbary
