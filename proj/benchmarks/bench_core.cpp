#include <benchmark/benchmark.h>

#include <vector>

#include "lissajous/algebra.hpp"
#include "lissajous/classify.hpp"
#include "lissajous/lissajous.hpp"
#include "lissajous/quad_surd.hpp"
#include "lissajous/surd.hpp"
#include "lissajous/syzygy.hpp"

using namespace lissajous;

namespace {

// Primitive type with |m| near the given bound.
LissajousType p0_near(std::int64_t max_m) { return enumerate_p0(max_m).back(); }

void BM_BuildH(benchmark::State& state) {
  NormalizedType nt = normalize(p0_near(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_H(nt));
}
BENCHMARK(BM_BuildH)->Arg(50)->Arg(200)->Arg(1000);

void BM_ReduceFrieze(benchmark::State& state) {
  FriezeWord h = build_H(normalize(p0_near(state.range(0))));
  // H times its inverse cancels completely, the worst case for the stack.
  std::vector<FriezeLetter> raw = h.letters();
  const std::vector<FriezeLetter>& inv = h.inverse().letters();
  raw.insert(raw.end(), inv.begin(), inv.end());
  for (auto _ : state) benchmark::DoNotOptimize(reduce_frieze(raw));
}
BENCHMARK(BM_ReduceFrieze)->Arg(50)->Arg(200)->Arg(1000);

void BM_WMatrix(benchmark::State& state) {
  NormalizedType nt = normalize(p0_near(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ab_to_matrix(build_W(nt)));
}
BENCHMARK(BM_WMatrix)->Arg(50)->Arg(200)->Arg(1000);

void BM_CfExpand(benchmark::State& state) {
  QuadSurd x = far_endpoint(ab_to_matrix(build_W(normalize(p0_near(state.range(0))))));
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(x));
}
BENCHMARK(BM_CfExpand)->Arg(50)->Arg(200)->Arg(1000);

void BM_LevelSlope(benchmark::State& state) {
  std::vector<LissajousType> types = enumerate_p0(state.range(0));
  for (auto _ : state) {
    for (const LissajousType& t : types) benchmark::DoNotOptimize(level_slope_of(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(types.size()));
}
BENCHMARK(BM_LevelSlope)->Arg(200);

void BM_Syzygy(benchmark::State& state) {
  LissajousType t = p0_near(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syzygy_sequence(t, 1));
}
BENCHMARK(BM_Syzygy)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
