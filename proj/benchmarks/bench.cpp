#include <benchmark/benchmark.h>

#include "mtc/character_table.hpp"
#include "mtc/fusion.hpp"
#include "mtc/orbifold_z2.hpp"
#include "mtc/perm_group.hpp"
#include "mtc/spectrum.hpp"
#include "mtc/theories.hpp"

namespace {

void BM_VerlindeFusion(benchmark::State& state) {
  const auto md = mtc::builtin_su2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtc::verlinde_fusion(md));
}
BENCHMARK(BM_VerlindeFusion)->Arg(4)->Arg(8);

void BM_Validate(benchmark::State& state) {
  const auto md = mtc::builtin_su2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtc::validate(md));
}
BENCHMARK(BM_Validate)->Arg(4)->Arg(8);

void BM_Z2Assemble(benchmark::State& state) {
  const auto md = mtc::builtin_su2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtc::z2_assemble(md));
}
BENCHMARK(BM_Z2Assemble)->Arg(1)->Arg(3);

void BM_IntegralitySweep(benchmark::State& state) {
  const auto md = mtc::builtin_su2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtc::integrality_report(md));
}
BENCHMARK(BM_IntegralitySweep)->Arg(4)->Arg(8);

void BM_CharacterTable(benchmark::State& state) {
  const auto g = mtc::PermGroup::symmetric(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mtc::character_table(g));
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(5);

void BM_SpectrumFull(benchmark::State& state) {
  const auto md = mtc::builtin_su2(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mtc::enumerate_spectrum(md, state.range(0), mtc::OrbifoldGroup::full));
}
BENCHMARK(BM_SpectrumFull)->Arg(3)->Arg(4);

void BM_SpectrumCyclic(benchmark::State& state) {
  const auto md = mtc::builtin_su2(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        mtc::enumerate_spectrum(md, state.range(0), mtc::OrbifoldGroup::cyclic));
}
BENCHMARK(BM_SpectrumCyclic)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
