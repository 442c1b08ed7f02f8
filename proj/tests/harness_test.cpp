#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "sphbary/error.hpp"
#include "sphbary/harness.hpp"
#include "test_support.hpp"

namespace sphbary {
namespace {

using harness::UsageError;
using testing::Gen;
using testing::octant;
using testing::unit;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorCode::ParseError;
}

std::string csv_of(const std::vector<harness::GridRow>& rows) {
  std::ostringstream out;
  harness::write_grid_csv(out, rows);
  return out.str();
}

TEST(PolygonFile, ParsesOptionalFields) {
  const auto f = harness::parse_polygon(R"({"name": "tri", "seed": 7, "vertices": [[2,0,0],[0,1,0],[0,0,1]]})");
  ASSERT_EQ(f.vertices.size(), 3u);
  EXPECT_EQ(f.name.value(), "tri");
  EXPECT_EQ(f.seed.value(), 7u);
  const auto bare = harness::parse_polygon(R"({"vertices": [[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_FALSE(bare.name.has_value());
  EXPECT_FALSE(bare.seed.has_value());
}

TEST(PolygonFile, ParseErrors) {
  EXPECT_EQ(code_of([] { harness::parse_polygon("not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { harness::parse_polygon(R"({"name": "x"})"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { harness::parse_polygon(R"({"vertices": [[1,0],[0,1,0],[0,0,1]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { harness::parse_polygon(R"({"vertices": [["a",0,0],[0,1,0],[0,0,1]]})"); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { harness::read_polygon("/nonexistent/polygon.json"); }), ErrorCode::ParseError);
}

TEST(PolygonFile, RoundTripIsLossless) {
  Gen gen(21);
  for (int k = 0; k < 50; ++k) {
    harness::PolygonFile f;
    f.name = "p" + std::to_string(k);
    f.seed = gen.bits();
    for (int i = 0; i < 6; ++i) f.vertices.push_back(gen.on_sphere() * gen.uniform(1e-3, 1e3));
    const auto back = harness::parse_polygon(harness::dump_polygon(f));
    ASSERT_EQ(back.vertices.size(), f.vertices.size());
    for (std::size_t i = 0; i < f.vertices.size(); ++i) EXPECT_EQ(back.vertices[i], f.vertices[i]);
    EXPECT_EQ(back.name, f.name);
    EXPECT_EQ(back.seed, f.seed);
    EXPECT_EQ(harness::dump_polygon(back), harness::dump_polygon(f));
  }
}

TEST(RandomPolygon, DefaultIsConvexAndReproducible) {
  harness::RandomPolygonOptions o;
  const auto a = harness::random_polygon(o);
  const auto b = harness::random_polygon(o);
  EXPECT_EQ(harness::dump_polygon(a), harness::dump_polygon(b));
  const SphericalPolygon p = validate_polygon(a.vertices);
  EXPECT_EQ(p.size(), 5u);
  EXPECT_TRUE(p.convex());
  EXPECT_EQ(a.seed.value(), 42u);
  o.seed = 43;
  EXPECT_NE(harness::dump_polygon(harness::random_polygon(o)), harness::dump_polygon(a));
}

TEST(RandomPolygon, VerticesStayWithinCap) {
  for (int s = 0; s < 50; ++s) {
    harness::RandomPolygonOptions o;
    o.n = 3 + s % 20;
    o.cap_radius = 0.2 + 0.02 * s;
    o.seed = static_cast<std::uint64_t>(s);
    const SphericalPolygon p = validate_polygon(harness::random_polygon(o).vertices);
    EXPECT_EQ(p.size(), static_cast<std::size_t>(o.n));
    EXPECT_TRUE(p.convex());
    // Any two vertices of the cap are at most twice the radius apart.
    for (const auto& u : p.vertices())
      for (const auto& v : p.vertices()) EXPECT_LE(angle_between(u, v), 2 * o.cap_radius + 1e-12);
  }
}

TEST(RandomPolygon, NonConvexHasReflexVertex) {
  harness::RandomPolygonOptions o;
  o.n = 4;
  o.nonconvex = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    o.seed = seed;
    const SphericalPolygon p = validate_polygon(harness::random_polygon(o).vertices);
    EXPECT_FALSE(p.convex());
    int reflex = 0;
    for (std::ptrdiff_t i = 0; i < 4; ++i) reflex += triple_product(p.vertex(i - 1), p.vertex(i), p.vertex(i + 1)) < 0;
    EXPECT_EQ(reflex, 1);
  }
}

TEST(RandomPolygon, UsageErrors) {
  harness::RandomPolygonOptions o;
  o.n = 2;
  EXPECT_THROW(harness::random_polygon(o), UsageError);
  o.n = 65;
  EXPECT_THROW(harness::random_polygon(o), UsageError);
  o.n = 5;
  o.cap_radius = 1.6;
  EXPECT_THROW(harness::random_polygon(o), UsageError);
  o.cap_radius = 0.0;
  EXPECT_THROW(harness::random_polygon(o), UsageError);
}

TEST(OracleTriangle, Examples) {
  const auto& v = octant();
  const double s = 1.0 / std::sqrt(3.0);
  const auto c = harness::oracle_triangle(v[0], v[1], v[2], {s, s, s});
  for (double x : c) EXPECT_NEAR(x, s, 1e-16);
  const auto e = harness::oracle_triangle(v[0], v[1], v[2], {1, 0, 0});
  EXPECT_EQ(e, (std::array<double, 3>{1, 0, 0}));
  const auto edge = harness::oracle_triangle(v[0], v[1], v[2], {0.6, 0.8, 0});
  EXPECT_NEAR(edge[0], 0.6, 1e-16);
  EXPECT_NEAR(edge[1], 0.8, 1e-16);
  EXPECT_EQ(edge[2], 0.0);
}

TEST(OracleTriangle, SingularMatrix) {
  EXPECT_EQ(code_of([] { harness::oracle_triangle({1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, 0, 1}); }),
            ErrorCode::SingularMatrix);
}

TEST(OracleTriangle, ReproducesRandomCombinations) {
  Gen gen(4);
  for (int k = 0; k < 100; ++k) {
    const Vec3 a = gen.on_sphere(), b = gen.on_sphere(), c = gen.on_sphere();
    if (std::abs(det3(a, b, c)) < 1e-3) continue;
    const double l[3] = {gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    const auto r = harness::oracle_triangle(a, b, c, l[0] * a + l[1] * b + l[2] * c);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(r[i], l[i], 1e-10);
  }
}

TEST(Levels, DefaultBands) {
  const auto levels = harness::default_levels();
  ASSERT_EQ(levels.size(), 6u);
  const double expect[6][2] = {{0.09, 0.10}, {0.11, 0.12}, {0.17, 0.18}, {0.23, 0.24}, {0.29, 0.30}, {0.35, 0.36}};
  for (int i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(levels[i].lo, expect[i][0]);
    EXPECT_DOUBLE_EQ(levels[i].hi, expect[i][1]);
  }
  EXPECT_EQ(harness::band_index(levels, 0.095), 0);
  EXPECT_EQ(harness::band_index(levels, 0.295), 4);
  EXPECT_EQ(harness::band_index(levels, 0.5), -1);
}

TEST(Levels, ParseNormalizesReversedBand) {
  const auto levels = harness::parse_levels("0.1:0.2,0.30:0.29");
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_DOUBLE_EQ(levels[1].lo, 0.29);
  EXPECT_DOUBLE_EQ(levels[1].hi, 0.30);
  EXPECT_THROW(harness::parse_levels("0.1-0.2"), UsageError);
  EXPECT_THROW(harness::parse_levels("a:b"), UsageError);
}

TEST(Grid, OctantSixteen) {
  const SphericalPolygon p = validate_polygon(octant());
  harness::GridOptions o;
  o.resolution = 16;
  const auto rows = harness::run_grid(p, o);
  ASSERT_EQ(rows.size(), 256u);
  int ok = 0;
  for (const auto& r : rows) {
    if (!r.value) {
      EXPECT_FALSE(r.error.empty());
      EXPECT_EQ(r.band, -1);
      continue;
    }
    ++ok;
    // Recompute the residual from a fresh evaluation.
    const CoordinateVector c = harness::evaluate(Method::NewMV, p, r.point, {});
    EXPECT_LE(linear_precision_residual(p.vertices(), r.point, c.values), 1e-8);
    EXPECT_EQ(*r.value, c.values[0]);
    EXPECT_EQ(r.band, harness::band_index(o.levels, *r.value));
  }
  EXPECT_GT(ok, 100);
}

TEST(Grid, RowsIndependentOfThreadCount) {
  const SphericalPolygon p = testing::sample_polygon(17);
  harness::GridOptions o;
  o.resolution = 24;
  o.methods = {Method::NewMV, Method::NewWC, Method::ClassicalWC};
  o.threads = 1;
  const std::string one = csv_of(harness::run_grid(p, o));
  o.threads = 5;
  EXPECT_EQ(csv_of(harness::run_grid(p, o)), one);
}

TEST(Grid, UsageErrors) {
  const SphericalPolygon p = validate_polygon(octant());
  harness::GridOptions o;
  o.resolution = 4;
  EXPECT_THROW(harness::run_grid(p, o), UsageError);
  o.resolution = 8;
  o.vertex_index = 4;
  EXPECT_THROW(harness::run_grid(p, o), UsageError);
  o.vertex_index = 0;
  EXPECT_THROW(harness::run_grid(p, o), UsageError);
}

TEST(Grid, CsvHeaderAndErrorRows) {
  const SphericalPolygon p = validate_polygon(octant());
  harness::GridOptions o;
  o.resolution = 8;
  o.methods = {Method::ClassicalMV};
  const std::string csv = csv_of(harness::run_grid(p, o));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), harness::kCsvHeader);
  EXPECT_NE(csv.find(",CC_MV,1,"), std::string::npos);
}

TEST(Compare, MeanValueVariantsAgree) {
  const SphericalPolygon p = validate_polygon(harness::random_polygon({}).vertices);
  const auto cc = harness::compare_methods(p, Method::NewMV, Method::ClassicalMV, 32);
  EXPECT_LE(cc.max_diff, 1e-8);
  EXPECT_EQ(cc.coverage(), 1.0);
  const auto closed = harness::compare_methods(p, Method::NewMV, Method::NewMVClosed, 32);
  EXPECT_LE(closed.max_diff, 1e-9);
  EXPECT_TRUE(closed.argmax.has_value());
}

TEST(Compare, ReportsPartialCoverage) {
  const SphericalPolygon p = testing::load_polygon("extended_square.json");
  // Odd resolution puts a sample at the pole, where every <x, v_i> > 0.
  const auto r = harness::compare_methods(p, Method::NewMV, Method::ClassicalMV, 33);
  EXPECT_GT(r.candidates, r.compared);
  EXPECT_GT(r.coverage(), 0.0);
  EXPECT_LT(r.coverage(), 1.0);
  EXPECT_LE(r.max_diff, 1e-8);
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : kAllMethods) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_FALSE(parse_method("MV").has_value());
}

TEST(Evaluate, DispatchesByMethod) {
  const SphericalPolygon p = validate_polygon(octant());
  for (Method m : kAllMethods) {
    const CoordinateVector c = harness::evaluate(m, p, unit(1, 2, 3));
    EXPECT_EQ(c.method, m);
    EXPECT_LE(linear_precision_residual(p.vertices(), unit(1, 2, 3), c.values), 1e-12);
  }
}

}  // namespace
}  // namespace sphbary
