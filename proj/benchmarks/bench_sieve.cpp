#include <benchmark/benchmark.h>

#include "hexile/oracle.hpp"
#include "hexile/sieve.hpp"

namespace {

void BM_MarkLevelsClass1(benchmark::State& state) {
    const auto q = static_cast<hexile::Level>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexile::mark_levels(hexile::kClass1, q).count());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MarkLevelsClass1)->RangeMultiplier(10)->Range(1'000, 10'000'000);

void BM_PrimesUpTo(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        hexile::stream_primes_up_to(x, [&n](std::uint64_t) { ++n; });
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimesUpTo)->RangeMultiplier(10)->Range(10'000, 100'000'000)->Unit(benchmark::kMillisecond);

// args: limit, levels per segment, workers
void BM_PrimesSegmented(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    hexile::SieveOptions options;
    options.workers = static_cast<unsigned>(state.range(2));
    for (auto _ : state) {
        std::uint64_t n = 0;
        hexile::stream_primes_segmented(x, static_cast<hexile::Level>(state.range(1)),
                                        [&n](std::uint64_t) { ++n; }, options);
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimesSegmented)
    ->ArgsProduct({{10'000'000, 100'000'000}, {4096, 1 << 16, 1 << 20}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_OracleEratosthenes(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexile::oracle::eratosthenes(x).primes.size());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OracleEratosthenes)->RangeMultiplier(10)->Range(10'000, 100'000'000)->Unit(benchmark::kMillisecond);

} // namespace
