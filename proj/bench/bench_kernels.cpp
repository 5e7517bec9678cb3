// OpenMP kernels against their serial references.
//
//   bench_kernels --benchmark_filter=Scan

#include <benchmark/benchmark.h>

#include "fracdelta/eigenfunction.hpp"
#include "fracdelta/spectrum.hpp"

namespace {

using namespace fracdelta;

const SpectralProblem kScanProblem{7.5, 3, 0.8};

void BM_ScanParallel(benchmark::State& state) {
  const auto grid = log_spaced(1e-8, 1e8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_determinant(kScanProblem, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanSerial(benchmark::State& state) {
  const auto grid = log_spaced(1e-8, 1e8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_determinant_serial(kScanProblem, grid));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

const SpectralProblem kGridProblem{4.0, 1, 1.0};

void BM_GridParallel(benchmark::State& state) {
  const auto sol = find_eigenvalues(kGridProblem).at(0);
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_grid(kGridProblem, sol, -10, 10, points));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GridSerial(benchmark::State& state) {
  const auto sol = find_eigenvalues(kGridProblem).at(0);
  const auto points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_grid_serial(kGridProblem, sol, -10, 10, points));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanParallel)->Arg(400)->Arg(4000)->UseRealTime();
BENCHMARK(BM_ScanSerial)->Arg(400)->Arg(4000)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(201)->Arg(2001)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(201)->Arg(2001)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
