// sphbary: command-line front end for spherical barycentric coordinates.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"
#include "sphbary/sphere_new.hpp"

namespace {

using namespace sphbary;
namespace h = sphbary::harness;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::optional<double> tol;
  bool extended = false;
  std::uint64_t seed = 42;

  EvalOptions eval() const {
    EvalOptions o;
    if (tol) o.tol.geom = *tol;
    o.extended = extended;
    return o;
  }
};

Method require_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw h::UsageError("unknown method '" + name + "' (NEW_MV, NEW_WC, NEW_MV_CLOSED, CC_MV, CC_WC)");
  return *m;
}

UnitVector require_point(const std::vector<double>& xyz, const Tolerances& tol) {
  if (xyz.size() != 3) throw h::UsageError("--point takes three numbers");
  return normalize({xyz[0], xyz[1], xyz[2]}, tol);
}

int cmd_validate(const std::string& path, const Globals& g) {
  const h::PolygonFile file = h::read_polygon(path);
  const SphericalPolygon p = validate_polygon(file.vertices, g.eval().tol);
  const UnitVector& w = p.witness();
  std::cout << "valid, " << (p.convex() ? "convex" : "nonconvex") << ", n=" << p.size() << '\n'
            << "orientation: anticlockwise\n"
            << "witness: " << h::format_real(w.x()) << ' ' << h::format_real(w.y()) << ' ' << h::format_real(w.z())
            << '\n';
  return 0;
}

int cmd_coords(const std::string& path, const std::vector<double>& point, const std::string& method,
               bool check_edge, const Globals& g) {
  const h::PolygonFile file = h::read_polygon(path);
  EvalOptions eval = g.eval();
  eval.check_edge_limit = check_edge;
  const UnitVector x = require_point(point, eval.tol);
  const Method m = require_method(method);

  CoordinateVector c;
  std::vector<UnitVector> ring;
  if (g.extended) {
    // Remark cases may not pass polygon validation; only the new
    // construction is defined there.
    ring = normalize_ring(file.vertices, eval.tol);
    if (m != Method::NewMV && m != Method::NewWC) throw h::UsageError("--extended supports NEW_MV and NEW_WC only");
    c = spherical_coords_extended(ring, x, m == Method::NewMV ? Backend3D::MeanValue : Backend3D::Wachspress, eval);
  } else {
    const SphericalPolygon p = validate_polygon(file.vertices, eval.tol);
    ring.assign(p.vertices().begin(), p.vertices().end());
    c = h::evaluate(m, p, x, eval);
  }

  std::cout << "method: " << method_name(c.method) << '\n' << "location: " << location_name(c.location) << '\n';
  std::cout << "psi:";
  for (double v : c.values) std::cout << ' ' << h::format_real(v);
  std::cout << '\n'
            << "sum: " << h::format_real(c.sum()) << '\n'
            << "residual: " << h::format_real(linear_precision_residual(ring, x, c.values)) << '\n';
  return 0;
}

int cmd_grid(const std::string& path, int vertex, int resolution, const std::vector<std::string>& methods,
             const std::string& levels, const std::string& output, const Globals& g) {
  const h::PolygonFile file = h::read_polygon(path);
  h::GridOptions opts;
  opts.eval = g.eval();
  opts.eval.extended = false;
  opts.vertex_index = vertex;
  opts.resolution = resolution;
  opts.methods.clear();
  for (const auto& name : methods) opts.methods.push_back(require_method(name));
  if (opts.methods.empty()) opts.methods.push_back(Method::NewMV);
  if (!levels.empty()) opts.levels = h::parse_levels(levels);

  // Validate arguments before touching the output file.
  if (resolution < 8) throw h::UsageError("resolution must be at least 8");
  const SphericalPolygon p = validate_polygon(file.vertices, opts.eval.tol);
  const auto rows = h::run_grid(p, opts);
  if (output.empty() || output == "-") {
    h::write_grid_csv(std::cout, rows);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw GeometryError(ErrorCode::ParseError, "cannot write " + output);
    h::write_grid_csv(out, rows);
  }
  return 0;
}

int cmd_compare(const std::string& path, const std::vector<std::string>& methods, int resolution, const Globals& g) {
  if (methods.size() != 2) throw h::UsageError("--methods takes exactly two method names");
  const h::PolygonFile file = h::read_polygon(path);
  EvalOptions eval = g.eval();
  eval.extended = false;
  const SphericalPolygon p = validate_polygon(file.vertices, eval.tol);
  const auto report = h::compare_methods(p, require_method(methods[0]), require_method(methods[1]), resolution, eval);
  h::print_compare_report(std::cout, report);
  return 0;
}

int cmd_random(int n, double radius, bool nonconvex, const std::string& output, const Globals& g) {
  h::RandomPolygonOptions opts;
  opts.n = n;
  opts.cap_radius = radius;
  opts.seed = g.seed;
  opts.nonconvex = nonconvex;
  const h::PolygonFile file = h::random_polygon(opts);
  if (output.empty() || output == "-") {
    std::cout << h::dump_polygon(file);
  } else {
    h::write_polygon(output, file);
  }
  return 0;
}

int cmd_oracle(const std::string& path, const std::vector<double>& point, const Globals& g) {
  const h::PolygonFile file = h::read_polygon(path);
  if (file.vertices.size() != 3) throw h::UsageError("oracle needs a triangle");
  const UnitVector x = require_point(point, g.eval().tol);
  const auto psi = h::oracle_triangle(file.vertices[0], file.vertices[1], file.vertices[2], x);
  std::cout << "psi: " << h::format_real(psi[0]) << ' ' << h::format_real(psi[1]) << ' ' << h::format_real(psi[2])
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical barycentric coordinates: evaluation, grids and comparisons"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--tol", g.tol, "Override the geometric classification tolerance (default 1e-10)");
  app.add_flag("--extended", g.extended, "Evaluate the new construction outside the interior/hemisphere contract");
  app.add_option("--seed", g.seed, "Seed for random generation")->capture_default_str();

  std::string file;
  std::vector<double> point;
  std::string method = "NEW_MV";
  bool check_edge = false;

  auto* validate = app.add_subcommand("validate", "Check a polygon file");
  validate->add_option("file", file, "Polygon file")->required();

  auto* coords = app.add_subcommand("coords", "Coordinates of one point");
  coords->add_option("file", file, "Polygon file")->required();
  coords->add_option("--point", point, "Point (x y z), normalized on input")->required()->expected(3);
  coords->add_option("--method", method, "NEW_MV | NEW_WC | NEW_MV_CLOSED | CC_MV | CC_WC")->capture_default_str();
  coords->add_flag("--check-edge", check_edge, "Cross-check edge coefficients against the 3D limit");

  int vertex = 1;
  int resolution = 64;
  std::vector<std::string> methods;
  std::string levels;
  std::string output;
  auto* grid = app.add_subcommand("grid", "Sample one coordinate over the polygon as CSV");
  grid->add_option("file", file, "Polygon file")->required();
  grid->add_option("--vertex", vertex, "One-based vertex index")->capture_default_str();
  grid->add_option("--resolution,-R", resolution, "Grid resolution R (R x R samples, R >= 8)")->capture_default_str();
  grid->add_option("--method", methods, "Method tag (repeatable, default NEW_MV)");
  grid->add_option("--levels", levels, "Contour bands lo:hi,lo:hi,...");
  grid->add_option("--output,-o", output, "CSV path (default stdout)");

  auto* compare = app.add_subcommand("compare", "Grid comparison of two methods");
  compare->add_option("file", file, "Polygon file")->required();
  compare->add_option("--methods", methods, "Two method tags")->required()->expected(2);
  compare->add_option("--resolution,-R", resolution, "Grid resolution")->capture_default_str();

  int n = 5;
  double radius = 0.8;
  bool nonconvex = false;
  auto* random = app.add_subcommand("random", "Generate a seeded random polygon file");
  random->add_option("--n", n, "Vertex count, 3..64")->capture_default_str();
  random->add_option("--radius", radius, "Cap radius in radians, (0, pi/2)")->capture_default_str();
  random->add_flag("--nonconvex", nonconvex, "Generate a polygon with a reflex vertex");
  random->add_option("--output,-o", output, "Output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "Linear-solve coordinates for a triangle");
  oracle->add_option("file", file, "Triangle polygon file")->required();
  oracle->add_option("--point", point, "Point (x y z)")->required()->expected(3);

  for (auto* sub : {validate, coords, grid, compare, random, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*validate) return cmd_validate(file, g);
    if (*coords) return cmd_coords(file, point, method, check_edge, g);
    if (*grid) return cmd_grid(file, vertex, resolution, methods, levels, output, g);
    if (*compare) return cmd_compare(file, methods, resolution, g);
    if (*random) return cmd_random(n, radius, nonconvex, output, g);
    if (*oracle) return cmd_oracle(file, point, g);
  } catch (const h::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GeometryError& e) {
    std::cout << to_string(e.code()) << '\n';
    std::cerr << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
