// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "dsr/enumeration.hpp"
#include "dsr/evaluate.hpp"

namespace {

const std::vector<dsr::Graph>& graphs_of_order(int n)
{
    static std::vector<std::vector<dsr::Graph>> cache(dsr::kMaxEnumerationOrder + 1);
    if (cache[n].empty())
        cache[n] = dsr::enumerate_connected(n);
    return cache[n];
}

void BM_EvaluateSerial(benchmark::State& state)
{
    const auto& graphs = graphs_of_order(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dsr::evaluate_serial(graphs, 2, 1, {}));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

void BM_EvaluateParallel(benchmark::State& state)
{
    const auto& graphs = graphs_of_order(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(dsr::evaluate_parallel(graphs, 2, 1, {}, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

void BM_EdgeDeletionSerial(benchmark::State& state)
{
    const auto& graphs = graphs_of_order(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dsr::edge_deletion_serial(graphs, {}, 1e-9));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

void BM_EdgeDeletionParallel(benchmark::State& state)
{
    const auto& graphs = graphs_of_order(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(dsr::edge_deletion_parallel(graphs, {}, 1e-9, jobs));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(graphs.size()));
}

} // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)
    ->ArgsProduct({{7, 8}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_EdgeDeletionSerial)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EdgeDeletionParallel)
    ->ArgsProduct({{7}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
