#include <benchmark/benchmark.h>

#include "affdimer/admissibility.hpp"
#include "affdimer/constructions.hpp"
#include "affdimer/enumerate.hpp"
#include "affdimer/search.hpp"

using namespace affdimer;

namespace {

const std::vector<IntVec2> kFigure = {{1, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, -2}};

Arrangement figure_dimer() {
  return Arrangement({{{1, 0}, Rational(0)},
                      {{1, 0}, Rational(1349146463, 2147483647)},
                      {{0, 1}, Rational(0)},
                      {{-1, 1}, Rational(1929886873, 2147483647)},
                      {{-1, -2}, Rational(399037182, 2147483647)}});
}

void BM_CheckFigure(benchmark::State& state) {
  const Arrangement a = figure_dimer();
  for (auto _ : state) benchmark::DoNotOptimize(check_admissible(a));
}
BENCHMARK(BM_CheckFigure);

// Lifts multiply the vertex count by |det|.
void BM_CheckLifted(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  const Arrangement a = lift_sublattice(figure_dimer(), SublatticeSpec{IntMat2::from_columns({1, 0}, {0, d})});
  for (auto _ : state) benchmark::DoNotOptimize(check_admissible(a));
  state.counters["vertices"] = static_cast<double>(13 * d);
}
BENCHMARK(BM_CheckLifted)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RandomSearch(benchmark::State& state) {
  const LatticePolygon p = polygon_from_classes(HomologyMultiset(kFigure));
  SearchOptions opt;
  opt.workers = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_search(p, 1000, seed++, opt));
}
BENCHMARK(BM_RandomSearch)->Unit(benchmark::kMillisecond);

void BM_VolumeEstimate(benchmark::State& state) {
  const LatticePolygon p = LatticePolygon::from_vertices({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  SearchOptions opt;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_admissible_volume(p, state.range(0), 1, true, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VolumeEstimate)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_TriangleDimer(benchmark::State& state) {
  const std::int64_t a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(triangle_dimer({a, 0}, {0, a}));
}
BENCHMARK(BM_TriangleDimer)->Arg(3)->Arg(6)->Arg(12);

void BM_EnumerateGenus2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_polygons(2, 6));
}
BENCHMARK(BM_EnumerateGenus2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
