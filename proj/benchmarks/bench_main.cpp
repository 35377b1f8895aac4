// Microbenchmarks for the enumeration, localization, and harness hot
// paths. Run: semiring-lab-bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "semiring_lab/harness.hpp"

namespace sl = semiring_lab;

namespace {

const sl::Corpus& corpus() { return sl::built_in_corpus(); }

void BM_IdealScan(benchmark::State& state) {
  sl::SemiringPtr z6 = corpus().find_semiring("z6");
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::all_ideals(*z6, sl::EnumStrategy::kScan));
}
BENCHMARK(BM_IdealScan);

void BM_IdealClosure(benchmark::State& state) {
  sl::SemiringPtr z6 = corpus().find_semiring("z6");
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::all_ideals(*z6, sl::EnumStrategy::kClosure));
}
BENCHMARK(BM_IdealClosure);

void BM_Subsemimodules(benchmark::State& state) {
  sl::SemimodulePtr sq = corpus().find_module("bool2.sq");
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::all_subsemimodules(*sq, sl::EnumStrategy::kScan));
}
BENCHMARK(BM_Subsemimodules);

void BM_LocalizeAtPrime(benchmark::State& state) {
  sl::SemiringPtr z6 = corpus().find_semiring("z6");
  sl::SubsetHandle p = z6->subset(0b010101);
  for (auto _ : state) benchmark::DoNotOptimize(sl::localize_at_prime(z6, p));
}
BENCHMARK(BM_LocalizeAtPrime);

void BM_QuotientContext(benchmark::State& state) {
  sl::SemiringPtr z6 = corpus().find_semiring("z6");
  for (auto _ : state) benchmark::DoNotOptimize(sl::quotient_context(z6));
}
BENCHMARK(BM_QuotientContext);

void BM_CheckT44(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl::check("T4.4", corpus()));
}
BENCHMARK(BM_CheckT44);

void BM_EnumerateOrder3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sl::enumerate_semirings(3, true));
}
BENCHMARK(BM_EnumerateOrder3);

}  // namespace

BENCHMARK_MAIN();
