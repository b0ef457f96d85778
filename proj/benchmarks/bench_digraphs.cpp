#include "tmoments/builtins.hpp"
#include "tmoments/functional_digraphs.hpp"

#include <benchmark/benchmark.h>

using namespace tmoments;

namespace {

void BM_digraph_aggregates(benchmark::State& state) {
    Transducer machine = wnaf_transducer(static_cast<int>(state.range(0)));
    FinalComponent fc = final_component(machine);
    for (auto _ : state) {
        DigraphAggregates agg = digraph_aggregates(fc);
        benchmark::DoNotOptimize(agg);
    }
}

void BM_combinatorial_moments(benchmark::State& state) {
    Transducer machine = wnaf_transducer(static_cast<int>(state.range(0)));
    FinalComponent fc = final_component(machine);
    for (auto _ : state) {
        Moments m = combinatorial_moments(fc);
        benchmark::DoNotOptimize(m);
    }
}

} // namespace

BENCHMARK(BM_digraph_aggregates)->DenseRange(2, 10, 2);
BENCHMARK(BM_combinatorial_moments)->DenseRange(2, 10, 2);
