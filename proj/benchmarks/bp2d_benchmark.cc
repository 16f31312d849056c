#include <benchmark/benchmark.h>

#include "bp2d/ea.h"
#include "bp2d/genbench.h"
#include "bp2d/lgfi.h"
#include "bp2d/sampling.h"

namespace {

using namespace bp2d;

void BM_LgfiPack(benchmark::State& state) {
  const Instance instance = generate_suite_instance(
      1, static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1);
  const Sequence order = preprocess_sort(instance);
  for (auto _ : state) benchmark::DoNotOptimize(pack(instance, order));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LgfiPack)->ArgsProduct({{1, 5, 7, 10}, {20, 100}});

void BM_SampleSequence(benchmark::State& state) {
  const Instance instance =
      generate_suite_instance(1, 5, static_cast<int>(state.range(0)), 1);
  const SequenceSampler sampler(instance, 10.0);
  RandomStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_SampleSequence)->Arg(20)->Arg(100);

void BM_Crossover(benchmark::State& state) {
  const Instance instance =
      generate_suite_instance(1, 5, static_cast<int>(state.range(0)), 1);
  const SequenceSampler sampler(instance, 10.0);
  RandomStream rng(2);
  const Sequence a = sampler.sample(rng);
  const Sequence b = sampler.sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(crossover(a, b, true, 0.75, rng));
}
BENCHMARK(BM_Crossover)->Arg(20)->Arg(100);

// One generation of the default configuration: ten evaluations.
void BM_EaGeneration(benchmark::State& state) {
  const Instance instance =
      generate_suite_instance(1, 7, static_cast<int>(state.range(0)), 1);
  const EaParams params;
  const SequenceSampler sampler(instance, params.kappa);
  RandomStream rng(3);
  SearchState search(instance);
  Population population =
      generate_initial_population(search, sampler, params.population_size, rng);
  for (auto _ : state) {
    population = ea_step(search, sampler, population, params, rng);
  }
  state.SetItemsProcessed(state.iterations() * params.population_size);
}
BENCHMARK(BM_EaGeneration)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
