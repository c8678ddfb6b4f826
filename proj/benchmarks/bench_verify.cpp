#include <benchmark/benchmark.h>

#include <mub/frames.hpp>

using namespace mub;

static void BM_VerifyAllPairs27(benchmark::State& state) {
  const MubSet m = frames_from_exponents(bkl_exponents(3, 3, 1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_mub_set(m, VerifyMode::all_pairs, 1));
}
BENCHMARK(BM_VerifyAllPairs27);

static void BM_VerifyDifferenceClass27(benchmark::State& state) {
  const MubSet m = frames_from_exponents(bkl_exponents(3, 3, 1));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_mub_set(m, VerifyMode::difference_class, 1));
}
BENCHMARK(BM_VerifyDifferenceClass27);

static void BM_VerifyDifferenceClass243(benchmark::State& state) {
  const MubSet m = frames_from_exponents(planar_exponents(5, 3));
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_mub_set(m, VerifyMode::difference_class, threads));
}
BENCHMARK(BM_VerifyDifferenceClass243)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Eigenframe32(benchmark::State& state) {
  const SpreadSet k = desarguesian(2, 5);
  const SymplecticSpread s = spread_from_spreadset(k);
  for (auto _ : state)
    benchmark::DoNotOptimize(eigenframe(s.members[3], EigenContext::complex_binary));
}
BENCHMARK(BM_Eigenframe32);

BENCHMARK_MAIN();
