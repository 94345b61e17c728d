#include <benchmark/benchmark.h>

#include "matsec/exact_oracle.hpp"
#include "matsec/free_order.hpp"
#include "matsec/generators.hpp"
#include "matsec/greedy.hpp"
#include "matsec/laminar_secretary.hpp"

namespace {

using namespace matsec;

Instance big_laminar(int n) {
  GeneratorParams params;
  params.kind = "laminar-random";
  params.n = n;
  params.depth = 8;
  params.seed = 99;
  return generate_instance(params);
}

void BM_LaminarIndependenceState(benchmark::State& state) {
  const Instance instance = big_laminar(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto checker = instance.matroid().make_state();
    int accepted = 0;
    for (ElementId f = 0; f < instance.n(); ++f) {
      if (checker->can_add(f)) {
        checker->add(f);
        ++accepted;
      }
    }
    benchmark::DoNotOptimize(accepted);
  }
}
BENCHMARK(BM_LaminarIndependenceState)->Arg(10000)->Arg(100000);

void BM_GreedyOpt(benchmark::State& state) {
  const Instance instance = big_laminar(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_opt(instance));
  }
}
BENCHMARK(BM_GreedyOpt)->Arg(10000)->Arg(100000);

void BM_FreeOrderTrial(benchmark::State& state) {
  const Instance instance = big_laminar(static_cast<int>(state.range(0)));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    Rng rng = Rng::for_trial(7, trial++);
    benchmark::DoNotOptimize(run_free_order(instance, rng));
  }
}
BENCHMARK(BM_FreeOrderTrial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ImprovedLaminarTrial(benchmark::State& state) {
  const Instance instance = big_laminar(static_cast<int>(state.range(0)));
  std::uint64_t trial = 0;
  for (auto _ : state) {
    Rng rng = Rng::for_trial(11, trial++);
    benchmark::DoNotOptimize(run_improved_laminar(instance, rng));
  }
}
BENCHMARK(BM_ImprovedLaminarTrial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_IntervalPartition(benchmark::State& state) {
  const Instance instance = big_laminar(static_cast<int>(state.range(0)));
  const std::vector<ElementId> anchors = greedy_opt(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(interval_partition(instance, anchors));
  }
}
BENCHMARK(BM_IntervalPartition)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ExactFreeOrderN12(benchmark::State& state) {
  GeneratorParams params;
  params.kind = "laminar-random";
  params.n = 12;
  params.depth = 3;
  params.seed = 46;
  const Instance instance = generate_instance(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_free_order(instance));
  }
}
BENCHMARK(BM_ExactFreeOrderN12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
