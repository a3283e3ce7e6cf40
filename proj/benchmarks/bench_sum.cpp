#include <benchmark/benchmark.h>

#include <cstdint>

#include "radixham/base.hpp"
#include "radixham/hamming.hpp"
#include "radixham/numeral.hpp"
#include "radixham/ruler.hpp"

namespace {

void BM_SumFast(benchmark::State& state) {
    const radixham::Base base(static_cast<std::uint64_t>(state.range(0)));
    const auto m = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(radixham::sum_fast(m, base));
    }
}
BENCHMARK(BM_SumFast)
    ->ArgNames({"base", "m"})
    ->Args({2, 1'000})
    ->Args({2, 1'000'000})
    ->Args({2, 1'000'000'000})
    ->Args({2, 1'000'000'000'000})
    ->Args({10, 1'000'000'000'000})
    ->Args({36, 1'000'000'000'000});

void BM_SumNaive(benchmark::State& state) {
    const radixham::Base base(static_cast<std::uint64_t>(state.range(0)));
    const auto m = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(radixham::sum_naive(m, base));
    }
}
BENCHMARK(BM_SumNaive)
    ->ArgNames({"base", "m"})
    ->Args({2, 1'000})
    ->Args({2, 100'000})
    ->Args({10, 100'000})
    ->Unit(benchmark::kMicrosecond);

void BM_ConsecutiveDistance(benchmark::State& state) {
    const radixham::Base base(static_cast<std::uint64_t>(state.range(0)));
    std::uint64_t m = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(radixham::consecutive_distance(m, base));
        ++m;
    }
}
BENCHMARK(BM_ConsecutiveDistance)->ArgName("base")->Arg(2)->Arg(10);

void BM_HammingNumerals(benchmark::State& state) {
    const radixham::Base base(static_cast<std::uint64_t>(state.range(0)));
    const auto lhs = radixham::to_numeral(987'654'321, base);
    const auto rhs = radixham::to_numeral(987'654'320, base);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radixham::hamming_numerals(lhs, rhs));
    }
}
BENCHMARK(BM_HammingNumerals)->ArgName("base")->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
