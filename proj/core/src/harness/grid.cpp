#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"
#include "sphbary/sphere_classical.hpp"

namespace sphbary::harness {

std::vector<Band> default_levels() {
  return {{0.09, 0.10}, {0.11, 0.12}, {0.17, 0.18}, {0.23, 0.24}, {0.29, 0.30}, {0.35, 0.36}};
}

std::vector<Band> parse_levels(const std::string& text) {
  std::vector<Band> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("level '" + item + "' is not lo:hi");
    double lo = 0.0, hi = 0.0;
    try {
      lo = std::stod(item.substr(0, colon));
      hi = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("level '" + item + "' is not numeric");
    }
    if (lo > hi) std::swap(lo, hi);
    levels.push_back({lo, hi});
  }
  return levels;
}

int band_index(const std::vector<Band>& levels, double value) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].lo <= value && value <= levels[i].hi) return static_cast<int>(i);
  }
  return -1;
}

std::vector<GridPoint> grid_points(const SphericalPolygon& p, int resolution, const Tolerances& tol) {
  Vec3 sum;
  for (const auto& v : p.vertices()) sum += v.vec();
  UnitVector center = p.witness();
  if (norm(sum) > tol.zero_norm) {
    const UnitVector c = normalize(sum, tol);
    const bool projects = std::all_of(p.vertices().begin(), p.vertices().end(),
                                      [&](const UnitVector& v) { return dot(v, c) > tol.projection; });
    if (projects) center = c;
  }
  const TangentPolygon image = gnomonic_project(p.vertices(), center, tol);
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& q : image.points2d) {
    min_x = std::min(min_x, q.x);
    max_x = std::max(max_x, q.x);
    min_y = std::min(min_y, q.y);
    max_y = std::max(max_y, q.y);
  }

  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int iy = 0; iy < resolution; ++iy) {
    const double v = min_y + (iy + 0.5) / resolution * (max_y - min_y);
    for (int ix = 0; ix < resolution; ++ix) {
      const double u = min_x + (ix + 0.5) / resolution * (max_x - min_x);
      const UnitVector x = normalize(center.vec() + image.b1 * u + image.b2 * v, tol);
      out.push_back({x, locate_point(p, x, tol)});
    }
  }
  return out;
}

namespace {

GridRow evaluate_row(const SphericalPolygon& p, const GridPoint& gp, Method method, const GridOptions& options) {
  GridRow row{gp.point, gp.location, method, options.vertex_index, std::nullopt, std::nullopt, -1, {}};
  if (std::holds_alternative<Exterior>(gp.location)) {
    row.error = to_string(ErrorCode::ExteriorPoint);
    return row;
  }
  try {
    const CoordinateVector c = evaluate(method, p, gp.point, options.eval);
    const double residual = linear_precision_residual(p.vertices(), gp.point, c.values);
    const double value = c.values[static_cast<std::size_t>(options.vertex_index - 1)];
    row.residual = residual;
    if (!(residual <= 1e-8)) {
      row.error = to_string(ErrorCode::LinearPrecisionViolation);
      return row;
    }
    row.value = value;
    row.band = band_index(options.levels, value);
  } catch (const GeometryError& e) {
    row.error = to_string(e.code());
  }
  return row;
}

}  // namespace

std::vector<GridRow> run_grid(const SphericalPolygon& p, const GridOptions& options) {
  if (options.resolution < 8) throw UsageError("resolution must be at least 8");
  if (options.vertex_index < 1 || options.vertex_index > static_cast<int>(p.size())) {
    throw UsageError("vertex index out of range");
  }
  const std::vector<GridPoint> points = grid_points(p, options.resolution, options.eval.tol);

  // Each worker fills a disjoint stride of slots; rows are concatenated in
  // grid order afterwards.
  std::vector<std::vector<GridRow>> slots(points.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads ? options.threads : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(points.size())));
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < points.size(); i += workers) {
      for (Method m : options.methods) slots[i].push_back(evaluate_row(p, points[i], m, options));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<GridRow> rows;
  rows.reserve(points.size() * options.methods.size());
  for (auto& s : slots) {
    for (auto& r : s) rows.push_back(std::move(r));
  }
  return rows;
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.point.x()) << ',' << format_real(r.point.y()) << ',' << format_real(r.point.z()) << ','
        << location_name(r.location) << ',' << method_name(r.method) << ',' << r.vertex_index << ','
        << (r.value ? format_real(*r.value) : "") << ',' << (r.residual ? format_real(*r.residual) : "") << ','
        << r.band << ',' << r.error << '\n';
  }
}

CompareReport compare_methods(const SphericalPolygon& p, Method a, Method b, int resolution, const EvalOptions& eval) {
  if (resolution < 8) throw UsageError("resolution must be at least 8");
  CompareReport report;
  report.a = a;
  report.b = b;
  double total = 0.0;
  std::size_t terms = 0;
  for (const auto& gp : grid_points(p, resolution, eval.tol)) {
    if (std::holds_alternative<Exterior>(gp.location)) continue;
    ++report.candidates;
    std::vector<double> pa, pb;
    try {
      pa = evaluate(a, p, gp.point, eval).values;
      pb = evaluate(b, p, gp.point, eval).values;
    } catch (const GeometryError&) {
      continue;
    }
    ++report.compared;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      const double d = std::abs(pa[i] - pb[i]);
      total += d;
      ++terms;
      if (!report.argmax || d > report.max_diff) {
        report.max_diff = d;
        report.argmax = gp.point.vec();
      }
    }
  }
  report.mean_diff = terms ? total / static_cast<double>(terms) : 0.0;
  return report;
}

void print_compare_report(std::ostream& out, const CompareReport& r) {
  out << "methods: " << method_name(r.a) << " vs " << method_name(r.b) << '\n'
      << "max_abs_diff: " << format_real(r.max_diff) << '\n'
      << "mean_abs_diff: " << format_real(r.mean_diff) << '\n';
  if (r.argmax) {
    out << "argmax_point: " << format_real(r.argmax->x) << ' ' << format_real(r.argmax->y) << ' '
        << format_real(r.argmax->z) << '\n';
  }
  out << "compared: " << r.compared << '/' << r.candidates << '\n'
      << "coverage: " << format_real(r.coverage()) << '\n';
}

}  // namespace sphbary::harness
