#include <benchmark/benchmark.h>
#include <algorithm>

#include <vector>

#include "dqsym/kernels.hpp"

using namespace dqsym;

namespace {

std::vector<Permutation> all_of(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void BM_SumPsiSigmaSerial(benchmark::State& state) {
    const auto perms = all_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_psi_sigma_serial(perms));
}

void BM_SumPsiSigmaParallel(benchmark::State& state) {
    const auto perms = all_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_psi_sigma_parallel(perms));
    state.counters["threads"] = max_threads();
}

void BM_BiwordGridSerial(benchmark::State& state) {
    const auto perms = all_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_biword_grid_serial(perms, perms));
}

void BM_BiwordGridParallel(benchmark::State& state) {
    const auto perms = all_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sum_biword_grid_parallel(perms, perms));
    state.counters["threads"] = max_threads();
}

}  // namespace

BENCHMARK(BM_SumPsiSigmaSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumPsiSigmaParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BiwordGridSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BiwordGridParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
