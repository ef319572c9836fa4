#include <benchmark/benchmark.h>

#include "grpverify/autmorph.hpp"
#include "grpverify/construct.hpp"
#include "grpverify/lattice.hpp"

using namespace grpverify;

static void BM_BuildPGL(benchmark::State& state) {
  const std::string src = "PGL(2," + std::to_string(state.range(0)) + ")";
  for (auto _ : state) {
    GroupHandle h = build(src);
    benchmark::DoNotOptimize(h.materialized().order());
  }
}
BENCHMARK(BM_BuildPGL)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

static void BM_NormalSubgroups(benchmark::State& state) {
  const GroupHandle h = build("S(" + std::to_string(state.range(0)) + ")");
  const MaterializedGroup& m = h.materialized();
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(m).size());
}
BENCHMARK(BM_NormalSubgroups)->Arg(4)->Arg(5)->Arg(6);

static void BM_SubgroupClasses(benchmark::State& state) {
  const GroupHandle h = build("S(" + std::to_string(state.range(0)) + ")");
  const MaterializedGroup& m = h.materialized();
  for (auto _ : state) benchmark::DoNotOptimize(subgroups_up_to_conjugacy(m).size());
}
BENCHMARK(BM_SubgroupClasses)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_JAnalysis(benchmark::State& state) {
  const GroupHandle h = build("swapsq(A(5))");
  const MaterializedGroup& m = h.materialized();
  for (auto _ : state) benchmark::DoNotOptimize(j_analysis(m, 7).min_index);
}
BENCHMARK(BM_JAnalysis)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& state) {
  const GroupHandle h = build(state.range(0) == 0 ? "S(4)" : "A(5)");
  const MaterializedGroup& m = h.materialized();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(m).order());
}
BENCHMARK(BM_Automorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Isomorphism(benchmark::State& state) {
  const GroupHandle a = build("PSL(2,9)");
  const GroupHandle b = build("A(6)");
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a.materialized(), b.materialized()));
}
BENCHMARK(BM_Isomorphism)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
