#include <benchmark/benchmark.h>

#include "zernike/oracle.hpp"

using namespace zernike;
using bases::BasisId;
using bases::Domain;
using bases::MultipletLabel;
using bases::System;

static void BM_InnerProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BasisId a{System::II, MultipletLabel::cartesian(n / 2, n - n / 2), Domain::disk};
  const BasisId b{System::III, MultipletLabel::cartesian(n / 2, n - n / 2), Domain::disk};
  const auto spec = oracle::QuadratureSpec::for_degree(2 * n);
  for (auto _ : state) {
    auto v = oracle::inner_product_disk(
        [&](const bases::DiskPoint& p) { return bases::psi(a, p); },
        [&](const bases::DiskPoint& p) { return bases::psi(b, p); }, spec);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_InnerProduct)->Arg(4)->Arg(8);

static void BM_SampleGrid(benchmark::State& state) {
  const BasisId b{System::I, MultipletLabel::polar(6, 2), Domain::disk};
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::sample_grid(b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SampleGrid)->Arg(128)->Arg(512);

static void BM_EigenResidual(benchmark::State& state) {
  const BasisId b{System::I, MultipletLabel::polar(3, 1), Domain::disk};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracle::zernike_eigen_residual(b, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EigenResidual)->Arg(128)->Arg(256);
