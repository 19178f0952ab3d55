#include <benchmark/benchmark.h>

#include <opent/epower.hpp>
#include <opent/protocol.hpp>
#include <opent/random.hpp>
#include <opent/schmidt.hpp>

using namespace opent;

static void BM_LinearEntanglement(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(1);
    const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(linear_entanglement(u));
}
BENCHMARK(BM_LinearEntanglement)->Arg(2)->Arg(3)->Arg(4);

static void BM_OperatorSchmidt(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(2);
    const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(operator_schmidt(u));
}
BENCHMARK(BM_OperatorSchmidt)->Arg(2)->Arg(3)->Arg(4);

static void BM_HaarUnitary(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    RandomSource rng(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(haar_unitary(dim, rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(9)->Arg(16);

static void BM_ProtocolProbability(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    RandomSource rng(4);
    const BipartiteOperator u(haar_unitary(d * d, rng), d, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(protocol_probability(u));
}
BENCHMARK(BM_ProtocolProbability)->Arg(2)->Arg(3);

static void BM_McEntanglingPower(benchmark::State& state) {
    RandomSource rng(5);
    const BipartiteOperator u(haar_unitary(4, rng), 2, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_entangling_power(u, state.range(0), 7));
}
BENCHMARK(BM_McEntanglingPower)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
