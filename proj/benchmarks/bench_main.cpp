#include <benchmark/benchmark.h>

#include "kron/kronecker.hpp"
#include "kron/prob_engine.hpp"

namespace {

using namespace kron;

void BM_finitary_gamma(benchmark::State& state) {
    WeightSequence a = linear_weights();
    PremiseModulus gamma{[](const Rational& eps) { return ceil_index(Rational(1) / eps); }};
    BoundSequence z([](Index) { return Index{5}; });
    Rational eps(1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finitary_gamma(a, gamma, z, eps));
}
BENCHMARK(BM_finitary_gamma)->Arg(8)->Arg(64)->Arg(512);

void BM_exact_enumeration(benchmark::State& state) {
    IndependentProcess P{[](Index) { return rademacher(); }, reals()};
    Index horizon = state.range(0);
    PrefixEvent ev{horizon, [](const std::vector<Vector>& prefix) {
                       Rational s = 0;
                       for (const auto& v : prefix) s += v[0];
                       return s > 2;
                   }};
    for (auto _ : state) benchmark::DoNotOptimize(exact_probability(P, ev));
}
BENCHMARK(BM_exact_enumeration)->Arg(8)->Arg(12)->Arg(16);

void BM_weighted_average(benchmark::State& state) {
    SpaceDescriptor d = reals();
    VectorSequence x = scalar_sequence([](Index i) { return Rational(1, Integer(i) + 1); });
    WeightSequence a = linear_weights();
    Index n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(weighted_average(d, x, a, n));
}
BENCHMARK(BM_weighted_average)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
