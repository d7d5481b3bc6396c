#include "purex/analysis.hpp"
#include "purex/protocol.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

using namespace purex;

namespace {

constexpr double kPi = std::numbers::pi;

void BM_Kron4x4(benchmark::State& state) {
    ComplexMatrix a = werner(0.7).matrix();
    ComplexMatrix b = werner(0.9).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron4x4);

void BM_Embed(benchmark::State& state) {
    ComplexMatrix u = heisenberg_u(kPi / 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(embed(u, {1, 3}, 4));
}
BENCHMARK(BM_Embed);

void BM_RoundExchange(benchmark::State& state) {
    DensityOp w = werner(0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(round_exchange(w, w, kPi / 2.0, -kPi / 2.0));
}
BENCHMARK(BM_RoundExchange);

void BM_FidelityMap(benchmark::State& state) {
    double f = 0.7;
    for (auto _ : state) {
        f = fidelity_map_heisenberg(f, kPi / 2.0, -kPi / 2.0);
        benchmark::DoNotOptimize(f);
        if (f > 0.99) f = 0.7;
    }
}
BENCHMARK(BM_FidelityMap);

void BM_FixedPoints(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fixed_points(ExchangeKind::Heisenberg, 1.3, -0.9));
}
BENCHMARK(BM_FixedPoints);

void BM_IterateWernerMode(benchmark::State& state) {
    ProtocolConfig config{ProtocolKind::Exchange, kPi / 2.0, -kPi / 2.0,
                          RetwirlMode::WernerEachRound};
    for (auto _ : state) benchmark::DoNotOptimize(iterate(config, 0.7, 0.99, 50));
}
BENCHMARK(BM_IterateWernerMode);

}  // namespace

BENCHMARK_MAIN();
