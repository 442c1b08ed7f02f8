#include "sphbary/harness.hpp"
#include "sphbary/sphere_classical.hpp"
#include "sphbary/sphere_new.hpp"

namespace sphbary::harness {

CoordinateVector evaluate(Method method, const SphericalPolygon& p, const UnitVector& x, const EvalOptions& options) {
  switch (method) {
    case Method::NewMV: return spherical_coords(p, x, Backend3D::MeanValue, options);
    case Method::NewWC: return spherical_coords(p, x, Backend3D::Wachspress, options);
    case Method::NewMVClosed: return spherical_coords_closed_form(p, x, options);
    case Method::ClassicalMV: return spherical_coords_classical(p, x, PlanarBackend::MeanValue, options);
    case Method::ClassicalWC: return spherical_coords_classical(p, x, PlanarBackend::Wachspress, options);
  }
  throw UsageError("unknown method");
}

}  // namespace sphbary::harness
