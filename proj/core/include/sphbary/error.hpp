#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sphbary {

enum class ErrorCode {
  ZeroVector,
  TooFewVertices,
  NotInHemisphere,
  WrongOrientation,
  DegenerateEdge,
  PointOnVertexOrAntipode,
  NotInterior,
  DegenerateTriangle,
  KernelViolation,
  NotConvex,
  FaceThroughPoint,
  ExteriorPoint,
  NonPositiveDenominator,
  NotConvexForWC,
  AngleDegenerate,
  AlphaNearPi,
  ProjectionUndefined,
  OriginOnBoundary,
  OriginOutside,
  SingularMatrix,
  GenerationFailed,
  LinearPrecisionViolation,
  ParseError,
  SelfIntersecting,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code is the machine-readable name printed by the CLI.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sphbary
