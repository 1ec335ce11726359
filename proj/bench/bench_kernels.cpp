// Serial reference vs OpenMP kernels. The content series runs on the full
// staircase shape, where no two boxes share a column (n^n fillings).

#include <benchmark/benchmark.h>

#include "asfc/kernels.hpp"
#include "asfc/springer.hpp"

namespace {

asfc::StatCtx ctx_for(int n) { return asfc::StatCtx(n, 1, 1); }

void BM_ContentSerial(benchmark::State& state) {
    const asfc::StatCtx ctx = ctx_for(static_cast<int>(state.range(0)));
    const asfc::DinvTable table(asfc::staircase(ctx), ctx);
    for (auto _ : state)
        benchmark::DoNotOptimize(asfc::content_series_serial(table, asfc::Sign::positive));
}

void BM_ContentParallel(benchmark::State& state) {
    const asfc::StatCtx ctx = ctx_for(static_cast<int>(state.range(0)));
    const asfc::DinvTable table(asfc::staircase(ctx), ctx);
    const int jobs = asfc::default_jobs();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            asfc::content_series_parallel(table, asfc::Sign::positive, jobs));
    state.counters["jobs"] = jobs;
}

void BM_CellsSerial(benchmark::State& state) {
    const asfc::StatCtx ctx(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(asfc::cell_records_serial(ctx));
}

void BM_CellsParallel(benchmark::State& state) {
    const asfc::StatCtx ctx(static_cast<int>(state.range(0)), 2, 1);
    const int jobs = asfc::default_jobs();
    for (auto _ : state)
        benchmark::DoNotOptimize(asfc::cell_records(ctx, jobs));
    state.counters["jobs"] = jobs;
}

}  // namespace

BENCHMARK(BM_ContentSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContentParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellsSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellsParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
