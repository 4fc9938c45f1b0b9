#include <benchmark/benchmark.h>

#include "effmodel/effmodel.hpp"

using namespace effmodel;

static void BM_GroupLaw(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto lambda = ring::parse_base("1 + pi", p);
  for (auto _ : state) benchmark::DoNotOptimize(witt::group_law_checks(lambda));
}
BENCHMARK(BM_GroupLaw)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_KernelAxioms(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  auto h = hopf::make_kernel(ring::parse_base("pi^4", p), ring::parse_base("pi^2", p));
  for (auto _ : state) benchmark::DoNotOptimize(hopf::check_axioms(h));
}
BENCHMARK(BM_KernelAxioms)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

// range(1) = 0 is regime A, otherwise regime B with n1 = range(1).
static model::ConductorSpec spec_of(const benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  return state.range(1) == 0 ? model::ConductorSpec::regime_a(p) : model::ConductorSpec::regime_b(p, state.range(1));
}

static void BM_EffectiveModel(benchmark::State& state) {
  auto b = model::build_cover(spec_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(model::effective_model(b.action));
}
BENCHMARK(BM_EffectiveModel)->ArgsProduct({{3, 5, 7}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

static void BM_InvariantLattice(benchmark::State& state) {
  auto b = model::build_cover(spec_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(model::invariant_lattice(b.action, model::kInvariantDegree));
}
BENCHMARK(BM_InvariantLattice)->ArgsProduct({{3, 5, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_Degenerate(benchmark::State& state) {
  auto spec = spec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(model::degenerate(spec));
}
BENCHMARK(BM_Degenerate)->ArgsProduct({{3, 5, 7}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
