#include "sphbary/coordinates.hpp"

#include <numeric>

namespace sphbary {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::NewMV: return "NEW_MV";
    case Method::NewWC: return "NEW_WC";
    case Method::NewMVClosed: return "NEW_MV_CLOSED";
    case Method::ClassicalMV: return "CC_MV";
    case Method::ClassicalWC: return "CC_WC";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

double CoordinateVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double linear_precision_residual(std::span<const UnitVector> ring, const Vec3& x, std::span<const double> psi) {
  Vec3 acc;
  for (std::size_t i = 0; i < ring.size(); ++i) acc += ring[i].vec() * psi[i];
  return norm(acc - x);
}

}  // namespace sphbary
