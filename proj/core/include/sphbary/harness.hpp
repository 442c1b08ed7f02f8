#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphbary/coordinates.hpp"

namespace sphbary::harness {

/// Precondition failures of the command layer (exit code 2 in the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Any of the five methods, dispatched by tag.
CoordinateVector evaluate(Method method, const SphericalPolygon& p, const UnitVector& x,
                          const EvalOptions& options = {});

// -- polygon files ----------------------------------------------------------

/// {"name": ..., "seed": ..., "vertices": [[x, y, z], ...]}
struct PolygonFile {
  std::vector<Vec3> vertices;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

PolygonFile parse_polygon(const std::string& text);
PolygonFile read_polygon(const std::string& path);
std::string dump_polygon(const PolygonFile& file);
void write_polygon(const std::string& path, const PolygonFile& file);

// -- random instances ---------------------------------------------------------

struct RandomPolygonOptions {
  int n = 5;
  /// Largest polar angle of a vertex around the cap center, in (0, pi/2).
  double cap_radius = 0.8;
  std::uint64_t seed = 42;
  /// Ask for a polygon with at least one reflex vertex instead.
  bool nonconvex = false;
};

/// Deterministic: the same options always give the same vertices. Throws
/// UsageError on out-of-range arguments and GeometryError(GenerationFailed)
/// after 1000 rejected attempts.
PolygonFile random_polygon(const RandomPolygonOptions& options);

/// Random positive combination of the vertices, resampled until it
/// classifies as Interior.
UnitVector random_interior_point(const SphericalPolygon& p, std::uint64_t seed);

// -- oracle -----------------------------------------------------------------

/// Solves psi_1 v_1 + psi_2 v_2 + psi_3 v_3 = x by Gaussian elimination with
/// partial pivoting. Throws GeometryError(SingularMatrix) when |det| <= 1e-12.
std::array<double, 3> oracle_triangle(const Vec3& v1, const Vec3& v2, const Vec3& v3, const Vec3& x);

// -- grids ------------------------------------------------------------------

struct Band {
  double lo;
  double hi;
};

/// The six contour bands used for the vertex-1 contour plots. The reversed
/// [0.30, 0.29] band is stored normalized.
std::vector<Band> default_levels();

/// "lo:hi,lo:hi,..." with each pair normalized so lo <= hi.
std::vector<Band> parse_levels(const std::string& text);

/// First band containing value, or -1.
int band_index(const std::vector<Band>& levels, double value);

struct GridPoint {
  UnitVector point;
  PointLocation location;
};

/// R x R cell centers of the bounding box of the polygon's gnomonic image
/// about its spherical centroid, lifted back to the sphere in row-major order.
std::vector<GridPoint> grid_points(const SphericalPolygon& p, int resolution, const Tolerances& tol = {});

struct GridRow {
  UnitVector point;
  PointLocation location;
  Method method;
  /// One based.
  int vertex_index;
  std::optional<double> value;
  std::optional<double> residual;
  int band = -1;
  std::string error;
};

struct GridOptions {
  int vertex_index = 1;
  int resolution = 16;
  std::vector<Method> methods{Method::NewMV};
  std::vector<Band> levels = default_levels();
  EvalOptions eval{};
  unsigned threads = 0;
};

/// One row per (grid point, method), ordered by grid index then method.
/// Per-point failures become rows with an error name. Throws UsageError
/// when resolution < 8 or the vertex index is out of range.
std::vector<GridRow> run_grid(const SphericalPolygon& p, const GridOptions& options);

inline constexpr const char* kCsvHeader = "px,py,pz,location,method,vertex_index,value,residual,band,error";

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

struct CompareReport {
  Method a = Method::NewMV;
  Method b = Method::NewMV;
  double max_diff = 0.0;
  double mean_diff = 0.0;
  std::optional<Vec3> argmax;
  /// Grid points inside or on the polygon.
  std::size_t candidates = 0;
  /// Of those, points where both methods succeeded.
  std::size_t compared = 0;

  double coverage() const { return candidates == 0 ? 0.0 : static_cast<double>(compared) / candidates; }
};

CompareReport compare_methods(const SphericalPolygon& p, Method a, Method b, int resolution,
                              const EvalOptions& eval = {});

void print_compare_report(std::ostream& out, const CompareReport& report);

/// Formats a double with 17 significant digits.
std::string format_real(double v);

}  // namespace sphbary::harness
