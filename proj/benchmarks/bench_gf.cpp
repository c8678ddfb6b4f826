#include <benchmark/benchmark.h>

#include <mub/gf.hpp>

using namespace mub;

static void BM_FieldMul(benchmark::State& state) {
  const Field f(3, static_cast<int>(state.range(0)));
  std::vector<GFElement> elems;
  for (int64_t r = 0; r < f.size(); ++r) elems.push_back(f.from_rank(r));
  size_t i = 1, j = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elems[i] * elems[j]);
    i = (i * 7 + 1) % elems.size();
    j = (j * 5 + 3) % elems.size();
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(3)->Arg(5);

static void BM_Trace(benchmark::State& state) {
  const Field f(3, static_cast<int>(state.range(0)));
  const GFElement x = f.from_rank(f.size() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(trace(x));
}
BENCHMARK(BM_Trace)->Arg(3)->Arg(5);

static void BM_SelfDualBasis(benchmark::State& state) {
  const Field f(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(self_dual_basis(f));
}
BENCHMARK(BM_SelfDualBasis)->Arg(4)->Arg(5)->Arg(8);

static void BM_IsPlanar243(benchmark::State& state) {
  const Field f(3, 5);
  std::vector<int64_t> table;
  for (int64_t r = 0; r < f.size(); ++r) table.push_back(f.from_rank(r).pow(14).rank());
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(f, table));
}
BENCHMARK(BM_IsPlanar243);
