#include <benchmark/benchmark.h>

#include "hexile/colide.hpp"
#include "hexile/counting.hpp"

namespace {

void BM_Pi(benchmark::State& state) {
    const auto x = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexile::pi(x).pi);
    }
}
BENCHMARK(BM_Pi)->RangeMultiplier(10)->Range(1'000, 100'000'000)->Unit(benchmark::kMicrosecond);

void BM_CountTuples(benchmark::State& state) {
    const auto q = static_cast<hexile::Level>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexile::count_tuples(hexile::ColideKind::C11, q) +
                                 hexile::count_tuples(hexile::ColideKind::C55, q) +
                                 hexile::count_tuples(hexile::ColideKind::C15, q));
    }
}
BENCHMARK(BM_CountTuples)->RangeMultiplier(100)->Range(100, 100'000'000'000);

void BM_DistinctByTuples(benchmark::State& state) {
    const auto q = static_cast<hexile::Level>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hexile::count_distinct_levels(hexile::kClass1, q, hexile::CountMethod::TupleEnumeration));
    }
}
BENCHMARK(BM_DistinctByTuples)->RangeMultiplier(10)->Range(100, 1'000'000)->Unit(benchmark::kMicrosecond);

// Semiprime 1000003 * 1000033 lands in class 1 with a nucleus near 1.7e11.
void BM_SolveSemiprime(benchmark::State& state) {
    const std::uint64_t x = std::uint64_t{1'000'003} * 1'000'033;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hexile::classify_integer(x).solutions.size());
    }
}
BENCHMARK(BM_SolveSemiprime)->Unit(benchmark::kMicrosecond);

} // namespace
