#include <benchmark/benchmark.h>

#include <vector>

#include "toricvol/enumerate.hpp"
#include "toricvol/normal_form.hpp"
#include "toricvol/polytope.hpp"
#include "toricvol/santalo.hpp"
#include "toricvol/toric.hpp"

using namespace toricvol;

namespace {

// conv(unit square x {0}, e_3, ..., e_n).
std::vector<RatVector> pyramid(std::size_t n) {
  std::vector<RatVector> pts;
  for (long a : {0, 1})
    for (long b : {0, 1}) {
      RatVector v = zeros(n);
      v[0] = a;
      v[1] = b;
      pts.push_back(v);
    }
  for (std::size_t i = 2; i < n; ++i) pts.push_back(unit_vector(n, i));
  return pts;
}

std::vector<RatVector> cube(std::size_t n) {
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

static void BM_ConvexHullCube(benchmark::State& state) {
  const auto pts = cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_ConvexHullCube)->DenseRange(2, 4);

static void BM_NormalFormCube(benchmark::State& state) {
  const Polytope p = convex_hull(cube(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p));
}
BENCHMARK(BM_NormalFormCube)->DenseRange(2, 3);

static void BM_SantaloPyramid(benchmark::State& state) {
  const Polytope p = convex_hull(pyramid(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(santalo_point(p));
}
BENCHMARK(BM_SantaloPyramid)->DenseRange(2, 4);

static void BM_NormalizedVolumeQuadric(benchmark::State& state) {
  const ToricCone quadric = cone_from_rays(std::vector<IntVector>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(normalized_volume(quadric));
}
BENCHMARK(BM_NormalizedVolumeQuadric);

static void BM_EnumerateSurfaces(benchmark::State& state) {
  const auto job = make_job(2, 1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_singularities(job));
}
BENCHMARK(BM_EnumerateSurfaces)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_EnumerateThreefolds(benchmark::State& state) {
  const auto job = make_job(3, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_singularities(job));
}
BENCHMARK(BM_EnumerateThreefolds)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
