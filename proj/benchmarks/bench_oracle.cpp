#include "tmoments/builtins.hpp"
#include "tmoments/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace tmoments;

namespace {

void BM_exact_moments_dp(benchmark::State& state) {
    Transducer machine = naf_transducer();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ExactMoments m = exact_moments_dp(machine, n);
        benchmark::DoNotOptimize(m);
    }
    state.SetComplexityN(n);
}

void BM_quasi_det_bound(benchmark::State& state) {
    Transducer machine = block10m01_transducer();
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Band band = quasi_det_bound(machine, Rational(0), n);
        benchmark::DoNotOptimize(band);
    }
}

} // namespace

BENCHMARK(BM_exact_moments_dp)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Complexity();
BENCHMARK(BM_quasi_det_bound)->Arg(50)->Arg(200);
