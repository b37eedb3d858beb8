#include <benchmark/benchmark.h>

#include <omp.h>

#include "garside/census.hpp"
#include "garside/conjugacy.hpp"
#include "garside/experiment.hpp"

using namespace garside;

namespace {

ExperimentConfig config(ExperimentKind kind, int samples) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.n = 4;
  cfg.lengths = {20, 40, 80};
  cfg.samples = samples;
  cfg.seed = 5;
  return cfg;
}

void BM_RigidProportionSerial(benchmark::State& state) {
  const auto cfg = config(ExperimentKind::RigidProportion, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_RigidProportionParallel(benchmark::State& state) {
  const auto cfg = config(ExperimentKind::RigidProportion, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ConjugacySuccessSerial(benchmark::State& state) {
  const auto cfg = config(ExperimentKind::ConjugacySuccess, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_ConjugacySuccessParallel(benchmark::State& state) {
  const auto cfg = config(ExperimentKind::ConjugacySuccess, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
  state.counters["threads"] = omp_get_max_threads();
}

void BM_FastRigidConjugate(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const Census census(4, l);
  Rng rng = stream_rng(17, static_cast<std::uint64_t>(l));
  std::vector<NormalForm> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(census.sample_sphere(0, l, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast_rigid_conjugate(xs[i++ % xs.size()]));
  }
  state.SetComplexityN(l);
}

}  // namespace

BENCHMARK(BM_RigidProportionSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RigidProportionParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacySuccessSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacySuccessParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastRigidConjugate)
    ->RangeMultiplier(2)
    ->Range(50, 400)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();
