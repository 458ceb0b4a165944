// Serial reference scan against the OpenMP column-parallel scan.
#include "iteral/fractal.hpp"

#include <benchmark/benchmark.h>

namespace {

const iteral::ScanRegion kRegion{{-2.5, -2.5}, {2.5, 2.5}, 0};

void BM_ScanSerial(benchmark::State& state)
{
    auto region = kRegion;
    region.grid = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto points = iteral::scan_serial(region, iteral::JuliaSet{iteral::TrigKind::Cosine});
        benchmark::DoNotOptimize(points);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_ScanParallel(benchmark::State& state)
{
    auto region = kRegion;
    region.grid = static_cast<int>(state.range(0));
    const iteral::ScanOptions options{static_cast<int>(state.range(1))};
    for (auto _ : state) {
        auto points = iteral::scan(region, iteral::JuliaSet{iteral::TrigKind::Cosine}, {}, options);
        benchmark::DoNotOptimize(points);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_MandelbrotParallel(benchmark::State& state)
{
    const iteral::ScanRegion region{{-2.0, -1.5}, {1.0, 1.5}, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        auto points = iteral::scan(region, iteral::MandelbrotSet{});
        benchmark::DoNotOptimize(points);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(100)->Arg(250)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Args({100, 1})->Args({250, 1})->Args({250, 2})->Args({250, 8})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MandelbrotParallel)->Arg(250)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
