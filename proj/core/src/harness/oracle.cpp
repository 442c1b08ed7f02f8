#include <cmath>
#include <utility>

#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"

namespace sphbary::harness {

std::array<double, 3> oracle_triangle(const Vec3& v1, const Vec3& v2, const Vec3& v3, const Vec3& x) {
  if (std::abs(det3(v1, v2, v3)) <= 1e-12) {
    throw GeometryError(ErrorCode::SingularMatrix, "triangle vertices are linearly dependent");
  }
  // Columns are the vertices.
  double m[3][4] = {{v1.x, v2.x, v3.x, x.x}, {v1.y, v2.y, v3.y, x.y}, {v1.z, v2.z, v3.z, x.z}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) std::swap(m[col][c], m[pivot][c]);
    }
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<double, 3> sol{};
  for (int r = 2; r >= 0; --r) {
    double acc = m[r][3];
    for (int c = r + 1; c < 3; ++c) acc -= m[r][c] * sol[c];
    sol[r] = acc / m[r][r];
  }
  return sol;
}

}  // namespace sphbary::harness
