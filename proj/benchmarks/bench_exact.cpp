#include <benchmark/benchmark.h>

#include "zernike/exact_value.hpp"
#include "zernike/hypergeom.hpp"

using namespace zernike;

static void BM_Factorial(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(factorial(n));
}
BENCHMARK(BM_Factorial)->Arg(20)->Arg(60);

static void BM_Pochhammer(benchmark::State& state) {
  const Rational a(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pochhammer(a, state.range(0)));
}
BENCHMARK(BM_Pochhammer)->Arg(10)->Arg(40);

static void BM_SqrtNormalize(benchmark::State& state) {
  const Rational rad = factorial(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ExactValue(1, Rational(3, 7), rad));
}
BENCHMARK(BM_SqrtNormalize)->Arg(12)->Arg(24)->Arg(48);

static void BM_EvalPFQ(benchmark::State& state) {
  const long n = state.range(0);
  const hyp::HypergeometricSpec spec{
      {Rational(-n), Rational(n) + Rational(1, 2), Rational(n) + Rational(1, 2),
       Rational(-n)},
      {Rational(2 * n + 1), Rational(1), Rational(-2 * n)}};
  for (auto _ : state) benchmark::DoNotOptimize(hyp::eval_pFq_unit(spec));
}
BENCHMARK(BM_EvalPFQ)->Arg(4)->Arg(8)->Arg(16);
