#include <benchmark/benchmark.h>

#include <vector>

#include "sphbary/harness.hpp"
#include "sphbary/sphere_new.hpp"

namespace {

using namespace sphbary;

struct Instance {
  SphericalPolygon polygon;
  std::vector<UnitVector> points;
};

Instance make_instance(int n) {
  harness::RandomPolygonOptions o;
  o.n = n;
  o.cap_radius = 0.8;
  o.seed = 1234;
  SphericalPolygon p = validate_polygon(harness::random_polygon(o).vertices);
  std::vector<UnitVector> points;
  for (std::uint64_t k = 0; k < 64; ++k) points.push_back(harness::random_interior_point(p, k));
  return {std::move(p), std::move(points)};
}

void BM_Evaluate(benchmark::State& state, Method method) {
  const Instance inst = make_instance(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(harness::evaluate(method, inst.polygon, inst.points[k++ % inst.points.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_LocatePoint(benchmark::State& state) {
  const Instance inst = make_instance(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(locate_point(inst.polygon, inst.points[k++ % inst.points.size()]));
}

void BM_Validate(benchmark::State& state) {
  harness::RandomPolygonOptions o;
  o.n = static_cast<int>(state.range(0));
  const auto raw = harness::random_polygon(o).vertices;
  for (auto _ : state) benchmark::DoNotOptimize(validate_polygon(raw));
}

void BM_Grid(benchmark::State& state) {
  const Instance inst = make_instance(8);
  harness::GridOptions o;
  o.resolution = static_cast<int>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_grid(inst.polygon, o));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Evaluate, new_mv, Method::NewMV)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Evaluate, new_wc, Method::NewWC)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Evaluate, new_mv_closed, Method::NewMVClosed)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Evaluate, cc_mv, Method::ClassicalMV)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK_CAPTURE(BM_Evaluate, cc_wc, Method::ClassicalWC)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_LocatePoint)->RangeMultiplier(4)->Range(4, 64);
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(4, 64);
BENCHMARK(BM_Grid)->Arg(32)->Arg(64);
BENCHMARK_MAIN();
