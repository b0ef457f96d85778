#include "tmoments/jet.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tmoments;

namespace {

JetMatrix random_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    JetMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Jet2& entry = m.at(i, j);
            entry.c0 = Rational(num(rng), den(rng));
            entry.cu = Rational(num(rng), den(rng));
            entry.cv = Rational(num(rng), den(rng));
            entry.cw = Rational(num(rng), den(rng));
            entry.cuv = Rational(num(rng), den(rng));
        }
    return m;
}

void BM_jet_det(benchmark::State& state) {
    std::mt19937 rng(7);
    JetMatrix m = random_matrix(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        Jet2 d = det(m);
        benchmark::DoNotOptimize(d);
    }
}

} // namespace

BENCHMARK(BM_jet_det)->Arg(2)->Arg(4)->Arg(8)->Arg(12);
