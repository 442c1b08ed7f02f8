#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sphbary/geometry.hpp"

namespace sphbary {

enum class Method { NewMV, NewWC, NewMVClosed, ClassicalMV, ClassicalWC };

inline constexpr Method kAllMethods[] = {Method::NewMV, Method::NewWC, Method::NewMVClosed, Method::ClassicalMV,
                                         Method::ClassicalWC};

/// NEW_MV, NEW_WC, NEW_MV_CLOSED, CC_MV, CC_WC
std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Spherical coordinates psi_1..psi_n of a point with respect to a polygon.
struct CoordinateVector {
  std::vector<double> values;
  Method method = Method::NewMV;
  PointLocation location = Interior{};
  /// phi_{n+2}(0) - phi_{n+1}(0) for interior points evaluated through Q
  /// (or the closed-form denominator); NaN otherwise.
  double denominator = std::numeric_limits<double>::quiet_NaN();

  double sum() const;
};

/// | sum_i psi_i v_i - x |
double linear_precision_residual(std::span<const UnitVector> ring, const Vec3& x, std::span<const double> psi);

struct EvalOptions {
  Tolerances tol{};
  /// On edges, recompute the coefficients as planar barycentric coordinates
  /// of the origin in the triangle (-x, v_j, v_{j+1}) and throw
  /// std::logic_error if they disagree with the Gram solve by more than 1e-10.
  bool check_edge_limit = false;
  /// Skip the interior test for the new construction; Q must still have the
  /// origin in its kernel.
  bool extended = false;
};

}  // namespace sphbary
