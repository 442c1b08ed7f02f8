#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"
#include "sphbary/sphere_classical.hpp"

namespace sphbary::harness {

namespace {

constexpr int kMaxAttempts = 1000;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Portable draws on top of mt19937_64 so files are identical across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Vec3 on_sphere() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, kTwoPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Vec3> lift(const std::vector<Point2>& pts, const Vec3& center) {
  const UnitVector c = normalize(center);
  const auto [b1, b2] = tangent_basis(c);
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(normalize(c.vec() + b1 * p.x + b2 * p.y).vec());
  return out;
}

}  // namespace

PolygonFile random_polygon(const RandomPolygonOptions& options) {
  if (options.n < 3 || options.n > 64) throw UsageError("n must be in [3, 64], got " + std::to_string(options.n));
  if (!(options.cap_radius > 0.0 && options.cap_radius < std::numbers::pi / 2)) {
    throw UsageError("cap radius must be in (0, pi/2)");
  }

  Rng rng(options.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vec3 center = rng.on_sphere();
    // Sorted azimuths around the cap center with random polar angles. For
    // convex polygons the lower end of the polar-angle range rises with the
    // attempt count, so large n still terminates.
    const double lo = options.nonconvex ? 0.25 * options.cap_radius
                                        : options.cap_radius * (1.0 - std::pow(0.99, attempt));
    std::vector<double> azimuth(static_cast<std::size_t>(options.n));
    for (auto& a : azimuth) a = rng.uniform(0.0, kTwoPi);
    std::sort(azimuth.begin(), azimuth.end());
    std::vector<Point2> pts;
    pts.reserve(azimuth.size());
    for (double a : azimuth) {
      const double r = std::tan(rng.uniform(lo, options.cap_radius));
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }

    PolygonFile file;
    file.vertices = lift(pts, center);
    file.seed = options.seed;
    file.name = (options.nonconvex ? "random-nonconvex-" : "random-convex-") + std::to_string(options.n);
    try {
      const SphericalPolygon p = validate_polygon(file.vertices);
      if (p.convex() != options.nonconvex) return file;
    } catch (const GeometryError&) {
    }
  }
  throw GeometryError(ErrorCode::GenerationFailed, "no valid polygon after " + std::to_string(kMaxAttempts) + " attempts");
}

UnitVector random_interior_point(const SphericalPolygon& p, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Vec3 acc;
    for (const auto& v : p.vertices()) acc += v.vec() * rng.uniform();
    const UnitVector x = normalize(acc);
    if (std::holds_alternative<Interior>(locate_point(p, x))) return x;
  }
  throw GeometryError(ErrorCode::GenerationFailed, "no interior sample found");
}

}  // namespace sphbary::harness
