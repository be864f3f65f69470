#include <benchmark/benchmark.h>

#include "zetalab/kernels.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

static void BM_HardyZScanSerial(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(hardy_z_scan_serial(1000.0, 0.05, n));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_HardyZScanSerial)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_HardyZScan(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const int threads = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(hardy_z_scan(1000.0, 0.05, n, threads));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_HardyZScan)->Args({1024, 1})->Args({1024, 2})->Args({1024, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

static double zeta_point(std::size_t i) {
    return std::abs(zeta(ComplexPoint(0.3, 10.0 + 0.37 * static_cast<double>(i))).value);
}

static void BM_ZetaSerialMap(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(serial_map<double>(2000, zeta_point));
}
BENCHMARK(BM_ZetaSerialMap)->Unit(benchmark::kMillisecond);

static void BM_ZetaParallelMap(benchmark::State& st) {
    const int threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(parallel_map<double>(2000, threads, zeta_point));
}
BENCHMARK(BM_ZetaParallelMap)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
