#include <benchmark/benchmark.h>

#include <random>

#include "ncflow/action.hpp"
#include "ncflow/spectral.hpp"
#include "ncflow/tensor.hpp"

using namespace ncflow;

namespace {
TensorPoly random_poly(std::mt19937& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> len(0, max_deg), letter(0, 1), coin(0, 1),
      coeff(-3, 3);
  TensorPoly p;
  for (int i = 0; i < terms; ++i) {
    std::string l, r;
    for (int k = len(rng); k > 0; --k) l.push_back(char(letter(rng)));
    for (int k = len(rng); k > 0; --k) r.push_back(char(letter(rng)));
    p.add(TensorMono{Word(l), Word(r), coin(rng) == 1}, Scalar(coeff(rng)));
  }
  return p;
}
}  // namespace

static void BM_StarProduct(benchmark::State& state) {
  Signature sig = Signature::from_pq(2, 0);
  std::mt19937 rng(5);
  TensorPoly a = random_poly(rng, int(state.range(0)), 4);
  TensorPoly b = random_poly(rng, int(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(star(a, b, sig));
}
BENCHMARK(BM_StarProduct)->Arg(8)->Arg(32)->Arg(128);

static void BM_HessianSextic(benchmark::State& state) {
  Signature sig = Signature::from_pq(2, 0);
  ActionFunctional a;
  a.add_single(Scalar::N(-1), Word::parse("AAABAB"));
  a.add(Scalar::one(), Word::parse("AB"), Word::parse("AAAB"));
  for (auto _ : state) benchmark::DoNotOptimize(hessian(a, sig, true));
}
BENCHMARK(BM_HessianSextic);

static void BM_SpectralExpansion6(benchmark::State& state) {
  Signature sig = Signature::from_pq(0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_expansion(6, sig));
}
BENCHMARK(BM_SpectralExpansion6);
