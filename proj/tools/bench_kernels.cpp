// Serial reference kernels vs their OpenMP counterparts on fixed inputs.
// The parallel variants must return identical exact values (enforced by the
// test suite); this target measures what the parallelism buys.

#include <benchmark/benchmark.h>

#include "hurwitz/constellation.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/tau.hpp"

using namespace hurwitz;

namespace {

const ProfileTuple kTuple{{2, 2, 1, 1}, {2, 2, 1, 1}, {2, 2, 1, 1}, {2, 2, 1, 1}};
const WeightGenSpec kGen{1, 1, std::nullopt, std::nullopt};

void BM_pure_bruteforce_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pure_hurwitz_bruteforce(kTuple, false));
}

void BM_pure_bruteforce_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pure_hurwitz_bruteforce_parallel(kTuple, false));
}

void BM_tau_table_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tau_table(kGen, 4, 3));
}

void BM_tau_table_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tau_table_parallel(kGen, 4, 3));
}

void BM_constellation_sum_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_constellation_weights(3, 1, 1, 2));
}

void BM_constellation_sum_parallel(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(sum_constellation_weights_parallel(3, 1, 1, 2));
}

BENCHMARK(BM_pure_bruteforce_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pure_bruteforce_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tau_table_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_tau_table_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_constellation_sum_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_constellation_sum_parallel)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
