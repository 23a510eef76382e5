#include <benchmark/benchmark.h>

#include <vector>

#include "fermatkit/fermatkit.hpp"

using fermatkit::Natural;

namespace {

// p * q for neighbouring primes: the case where the b-scan stops early.
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kBalanced = {
    {97, 103}, {1009, 1013}, {10007, 10009}, {1'000'003, 1'000'033}};

// Primes force a scan all the way to b_max.
const std::vector<std::uint64_t> kPrimes = {101, 10007, 1'000'003, 100'000'007};

void BM_FermatSplitBalanced(benchmark::State& state) {
    const auto [p, q] = kBalanced[static_cast<std::size_t>(state.range(0))];
    const Natural n = Natural(p) * Natural(q);
    std::uint64_t candidates = 0;
    for (auto _ : state) {
        auto outcome = fermatkit::fermat_split(n);
        candidates = outcome.stats.candidates_tested;
        benchmark::DoNotOptimize(outcome);
    }
    state.counters["candidates"] = static_cast<double>(candidates);
    state.SetLabel(n.to_string());
}
BENCHMARK(BM_FermatSplitBalanced)->DenseRange(0, 3);

void BM_FermatSplitPrime(benchmark::State& state) {
    const Natural n(kPrimes[static_cast<std::size_t>(state.range(0))]);
    std::uint64_t candidates = 0;
    for (auto _ : state) {
        auto outcome = fermatkit::fermat_split(n);
        candidates = outcome.stats.candidates_tested;
        benchmark::DoNotOptimize(outcome);
    }
    state.counters["candidates"] = static_cast<double>(candidates);
    state.counters["candidates/s"] =
        benchmark::Counter(static_cast<double>(candidates), benchmark::Counter::kIsIterationInvariantRate);
    state.SetLabel(n.to_string());
}
BENCHMARK(BM_FermatSplitPrime)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_WideScanPrime(benchmark::State& state) {
    // Same prime through the arbitrary-precision scan, for comparison with
    // the narrow path above.
    const Natural n(kPrimes[static_cast<std::size_t>(state.range(0))]);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermatkit::detail::fermat_scan_wide(n, std::nullopt));
    }
    state.SetLabel(n.to_string());
}
BENCHMARK(BM_WideScanPrime)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_FactorizeRange(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        for (std::uint64_t n = 1; n <= hi; ++n) benchmark::DoNotOptimize(fermatkit::factorize(Natural(n)));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hi));
}
BENCHMARK(BM_FactorizeRange)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_TrialDivisionRange(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        for (std::uint64_t n = 1; n <= hi; ++n) {
            benchmark::DoNotOptimize(fermatkit::oracle::trial_division_factorize(Natural(n)));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hi));
}
BENCHMARK(BM_TrialDivisionRange)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_CheckSquare(benchmark::State& state) {
    const Natural base = Natural(2).pow(static_cast<std::uint64_t>(state.range(0))) + Natural(3);
    const Natural square = base * base;
    const Natural filtered = square + Natural(1);  // ...10 mod 100 is not a square class
    for (auto _ : state) {
        benchmark::DoNotOptimize(fermatkit::check_square(square));
        benchmark::DoNotOptimize(fermatkit::check_square(filtered));
    }
}
BENCHMARK(BM_CheckSquare)->Arg(32)->Arg(256)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
