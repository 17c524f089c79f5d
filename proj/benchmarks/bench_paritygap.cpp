// Microbenchmarks for the hot paths: segment sieving, pair streaming,
// the one-division-per-point parity scan, and the gap-bound margins.
// Build-only in CI; run manually:
//   ./build/benchmarks/paritygap_bench --benchmark_min_time=0.2s

#include <benchmark/benchmark.h>

#include "paritygap/conjectures.hpp"
#include "paritygap/parity.hpp"
#include "paritygap/primes.hpp"

namespace pg = paritygap;

namespace {

void BM_SieveSegment(benchmark::State& state) {
    const uint64_t lo = uint64_t(state.range(0));
    const uint64_t width = uint64_t{1} << 21;
    pg::base_primes_upto(pg::isqrt(lo + width));  // warm the base cache
    for (auto _ : state) {
        pg::PrimeWindow w = pg::sieve_segment(lo, lo + width);
        benchmark::DoNotOptimize(w.count_primes());
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(width));
}
BENCHMARK(BM_SieveSegment)->Arg(1'000'000)->Arg(100'000'000)->Arg(10'000'000'000);

void BM_PairStream(benchmark::State& state) {
    const uint64_t lo = uint64_t(state.range(0));
    const uint64_t width = uint64_t{1} << 18;
    for (auto _ : state) {
        uint64_t pairs = 0;
        pg::for_each_pair(lo, lo + width, [&](const pg::PrimePair&) { ++pairs; });
        benchmark::DoNotOptimize(pairs);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(width));
}
BENCHMARK(BM_PairStream)->Arg(1'000'000)->Arg(100'000'000);

void BM_ParityScan(benchmark::State& state) {
    const uint64_t lo = uint64_t(state.range(0));
    const uint64_t width = uint64_t{1} << 16;
    std::vector<pg::PrimePair> pairs;
    pg::for_each_pair(lo, lo + width, [&](const pg::PrimePair& p) {
        pairs.push_back(p);
    });
    for (auto _ : state) {
        pg::ScanStats stats;
        for (const pg::PrimePair& p : pairs) {
            benchmark::DoNotOptimize(pg::parity_scan_pair(p, stats));
        }
        state.counters["divisions"] =
            benchmark::Counter(double(stats.divisions),
                               benchmark::Counter::kIsIterationInvariant);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) *
                            int64_t(pairs.size()));
}
BENCHMARK(BM_ParityScan)->Arg(1'000'000)->Arg(100'000'000);

void BM_GapBound(benchmark::State& state) {
    const uint64_t lo = uint64_t(state.range(0));
    const uint64_t width = uint64_t{1} << 16;
    std::vector<pg::PrimePair> pairs;
    pg::for_each_pair(lo, lo + width, [&](const pg::PrimePair& p) {
        pairs.push_back(p);
    });
    for (auto _ : state) {
        for (const pg::PrimePair& p : pairs) {
            benchmark::DoNotOptimize(pg::gap_bound_check(p));
        }
    }
    state.SetItemsProcessed(int64_t(state.iterations()) *
                            int64_t(pairs.size()));
}
BENCHMARK(BM_GapBound)->Arg(1'000'000)->Arg(100'000'000);

void BM_IsPrime(benchmark::State& state) {
    const uint64_t base = uint64_t(state.range(0));
    for (auto _ : state) {
        uint64_t hits = 0;
        for (uint64_t n = base; n < base + 512; ++n) hits += pg::is_prime(n);
        benchmark::DoNotOptimize(hits);
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * 512);
}
BENCHMARK(BM_IsPrime)->Arg(1'000'003)->Arg(1'000'000'000'039ULL);

void BM_SqrtDiffCompare(benchmark::State& state) {
    // Exact comparator on near-tie inputs: consecutive pairs with equal
    // fixed-point rank keys would land here.
    for (auto _ : state) {
        benchmark::DoNotOptimize(pg::compare_sqrt_diff(113, 127, 1327, 1361));
        benchmark::DoNotOptimize(pg::compare_sqrt_diff(2, 8, 8, 18));
    }
}
BENCHMARK(BM_SqrtDiffCompare);

}  // namespace

BENCHMARK_MAIN();
