#include "sphbary/error.hpp"

namespace sphbary {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotInHemisphere: return "NotInHemisphere";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::PointOnVertexOrAntipode: return "PointOnVertexOrAntipode";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::KernelViolation: return "KernelViolation";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::FaceThroughPoint: return "FaceThroughPoint";
    case ErrorCode::ExteriorPoint: return "ExteriorPoint";
    case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorCode::NotConvexForWC: return "NotConvexForWC";
    case ErrorCode::AngleDegenerate: return "AngleDegenerate";
    case ErrorCode::AlphaNearPi: return "AlphaNearPi";
    case ErrorCode::ProjectionUndefined: return "ProjectionUndefined";
    case ErrorCode::OriginOnBoundary: return "OriginOnBoundary";
    case ErrorCode::OriginOutside: return "OriginOutside";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::LinearPrecisionViolation: return "LinearPrecisionViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

}  // namespace sphbary
