#include <benchmark/benchmark.h>

#include <random>

#include "cmif/frobenius.hpp"
#include "cmif/oracle.hpp"
#include "cmif/primesieve.hpp"
#include "cmif/stats.hpp"

using namespace cmif;

namespace {

const CmCurve& curve(const char* label) { return find_curve(builtin_curves(), label); }

void BM_SegmentedSieve(benchmark::State& state) {
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_prime({2, hi}, [&](std::uint64_t) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SegmentedSieve)->Arg(1 << 20)->Arg(1 << 24);

void BM_DpEpOrdinary(benchmark::State& state) {
    const CmCurve& c = curve("j1728-D4");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_in({1000000, 1100000})) {
        if (classify(p, c) == ReductionKind::GoodOrdinary) primes.push_back(p);
    }
    std::mt19937_64 rng(1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dp_ep(primes[i], c, rng));
        i = (i + 1) % primes.size();
    }
}
BENCHMARK(BM_DpEpOrdinary);

void BM_DpEpSupersingular(benchmark::State& state) {
    const CmCurve& c = curve("jm262537412640768000-D163");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_in({1000000, 1100000})) {
        if (classify(p, c) == ReductionKind::GoodSupersingular) primes.push_back(p);
    }
    std::mt19937_64 rng(1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dp_ep(primes[i], c, rng));
        i = (i + 1) % primes.size();
    }
}
BENCHMARK(BM_DpEpSupersingular);

void BM_OracleGroupStructure(benchmark::State& state) {
    const CmCurve& c = curve("j0-D3");
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(group_structure(c, p));
}
BENCHMARK(BM_OracleGroupStructure)->Arg(1009)->Arg(10007)->Arg(99991);

void BM_Scan(benchmark::State& state) {
    ScanOptions opts;
    opts.x_max = static_cast<std::uint64_t>(state.range(0));
    opts.workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(scan(curve("j1728-D4"), opts));
}
BENCHMARK(BM_Scan)->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

void BM_SchurSum(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(schur_sum(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SchurSum)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
