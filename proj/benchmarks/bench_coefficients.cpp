#include <benchmark/benchmark.h>

#include "zernike/interbasis.hpp"

using namespace zernike;
using interbasis::Pair;
using interbasis::Route;

static void BM_ClebschGordan(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        coupling::special_cg(static_cast<int>(n), 0, static_cast<int>(n / 2)));
}
BENCHMARK(BM_ClebschGordan)->Arg(4)->Arg(8)->Arg(16);

static void BM_U_CGSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(interbasis::u_II_III(n / 2, n - n / 2, n / 2, n - n / 2,
                                                  Route::CGSum));
}
BENCHMARK(BM_U_CGSum)->Arg(4)->Arg(8);

static void BM_U_4F3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(interbasis::u_II_III(n / 2, n - n / 2, n / 2, n - n / 2,
                                                  Route::Hyper4F3));
}
BENCHMARK(BM_U_4F3)->Arg(4)->Arg(8);

static void BM_U_Racah(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(interbasis::u_II_III(n / 2, n - n / 2, n / 2, n - n / 2,
                                                  Route::Racah));
}
BENCHMARK(BM_U_Racah)->Arg(4)->Arg(8);

static void BM_AssembleMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        interbasis::assemble_matrix(n, Pair::II_III, Route::CGSum));
}
BENCHMARK(BM_AssembleMatrix)->Arg(4)->Arg(8);
