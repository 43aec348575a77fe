#include <benchmark/benchmark.h>

#include "ncflow/solve.hpp"

using namespace ncflow;

static void BM_BuildF_2MM(benchmark::State& state) {
  TruncationSpec t = fuzzy2d_deg6(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(build_F(t));
}
BENCHMARK(BM_BuildF_2MM);

static void BM_StarSquare_2MM(benchmark::State& state) {
  TruncationSpec t = fuzzy2d_deg6(2, 0);
  SuperMatrix F = build_F(t);
  for (auto _ : state)
    benchmark::DoNotOptimize(F.star_compose(F, t.sig));
}
BENCHMARK(BM_StarSquare_2MM);

static void BM_ExtractBetas_2MM(benchmark::State& state) {
  TruncationSpec t = fuzzy2d_deg6(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(extract_betas(t, 2));
}
BENCHMARK(BM_ExtractBetas_2MM);

static void BM_NewtonSolve_02(benchmark::State& state) {
  TruncationSpec t = fuzzy2d_deg6(0, 2);
  PolySystem ps = PolySystem::compile(apply_duality(extract_betas(t, 2), t.sig));
  std::vector<double> seed(size_t(ps.dim()), 0.0);
  seed[size_t(ps.index_of("a4"))] = -0.084;
  seed[size_t(ps.index_of("c22"))] = -0.042;
  for (auto _ : state) benchmark::DoNotOptimize(newton_solve(ps, seed));
}
BENCHMARK(BM_NewtonSolve_02);

static void BM_RegulatorMoment(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(h_tilde_numeric(2, int(state.range(0)), 0.0));
}
BENCHMARK(BM_RegulatorMoment)->Arg(100)->Arg(400);

BENCHMARK_MAIN();
