#pragma once

#include <span>
#include <vector>

#include "sphbary/coordinates.hpp"
#include "sphbary/coords3d.hpp"

namespace sphbary {

/// Per-point angles: theta_i = angle(x, v_i) and alpha_i = angle(x × v_i,
/// x × v_{i+1}), indexed cyclically.
struct AngleCache {
  std::vector<double> theta;
  std::vector<double> alpha;
};

/// Throws AngleDegenerate when x is within tol.angle of some v_i or -v_i.
AngleCache angles(std::span<const UnitVector> ring, const UnitVector& x, const Tolerances& tol = {});

struct ClosedFormWeights {
  /// omega_i, the mean value weight of the origin for v_i in Q.
  std::vector<double> omega;
  /// w_{n+2} - w_{n+1}.
  double denominator;
};

/// Closed-form mean value weights in terms of theta_i and alpha_i:
///   omega_i = pi (tan(alpha_i/2) + tan(alpha_{i-1}/2)) / (2 sin theta_i)
///   denom   = pi/2 * sum_i cot(theta_i) (tan(alpha_i/2) + tan(alpha_{i-1}/2))
/// Requires x to see every edge anti-clockwise (KernelViolation otherwise).
ClosedFormWeights closed_form_mv_weights(std::span<const UnitVector> ring, const UnitVector& x,
                                         const Tolerances& tol = {});

/// psi_i(x) = phi_i(0) / (phi_{n+2}(0) - phi_{n+1}(0)) for interior points,
/// the Gram coefficients on edges and the Kronecker delta at vertices.
///
/// Errors: ExteriorPoint, NotConvexForWC, NonPositiveDenominator, plus those
/// of build_q and the 3D backend.
CoordinateVector spherical_coords(const SphericalPolygon& p, const UnitVector& x, Backend3D backend,
                                  const EvalOptions& options = {});

/// Same dispatch as spherical_coords, with the interior evaluated through
/// closed_form_mv_weights.
CoordinateVector spherical_coords_closed_form(const SphericalPolygon& p, const UnitVector& x,
                                              const EvalOptions& options = {});

/// Evaluates the Q construction for an arbitrary ring (no hemisphere or
/// interior precondition). The origin must lie in the kernel of Q.
CoordinateVector spherical_coords_extended(std::span<const UnitVector> ring, const UnitVector& x,
                                           Backend3D backend, const EvalOptions& options = {});

/// psi from phi(0): divides the first n entries by phi_{n+2} - phi_{n+1}.
/// Throws NonPositiveDenominator when that difference is <= tol.denominator.
std::vector<double> quotient_from_origin_coords(const Coordinates3D& phi, std::size_t n, double& denominator,
                                                const Tolerances& tol = {});

}  // namespace sphbary
