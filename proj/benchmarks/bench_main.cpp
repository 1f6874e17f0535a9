#include <benchmark/benchmark.h>

#include <random>

#include "fusionlab/catalog.hpp"
#include "fusionlab/cohomology.hpp"
#include "fusionlab/harness.hpp"

using namespace fusionlab;

namespace {

FusionSystem fs(const char* d, std::uint32_t p) { return FusionSystem::build(group_from_descriptor(d), Prime(p)); }

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> val(0, 2);
  FpMatrix m(Prime(3), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, val(rng));
  }
  m.choose_storage();
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(128)->Arg(512);

void BM_BarComplex(benchmark::State& state) {
  const auto f = fs("S3", 3);
  const FpModule m = trivial_module(Subgroup::whole(f.group_ptr()), f.prime(), 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BarComplex(m, n).cochain_dim(n));
}
BENCHMARK(BM_BarComplex)->DenseRange(1, 3);

void BM_Resolution(benchmark::State& state) {
  const auto f = fs("S4", 2);
  const FpModule m = trivial_module(f.sylow(), f.prime(), 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ResolutionComplex(m, n).cochain_dim(n));
}
BENCHMARK(BM_Resolution)->DenseRange(2, 8, 2);

void BM_StableElements(benchmark::State& state) {
  const auto f = fs("S4", 2);
  const FpModule m = trivial_module(f.sylow(), f.prime(), 1);
  const Engine e = state.range(0) == 0 ? Engine::Resolution : Engine::Bar;
  for (auto _ : state) {
    FusionCohomology fc(f, m, {e, 3, {}});
    benchmark::DoNotOptimize(fc.stable_elements(3).dim());
  }
  state.SetLabel(to_string(e));
}
BENCHMARK(BM_StableElements)->Arg(0)->Arg(1);

void BM_TheoremCheck(benchmark::State& state) {
  const auto f = fs("SL23", 2);
  const auto battery = default_battery(f);
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem_check("SL23", f, battery, {}).exit_code());
}
BENCHMARK(BM_TheoremCheck);

}  // namespace

BENCHMARK_MAIN();
