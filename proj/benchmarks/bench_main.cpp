#include <benchmark/benchmark.h>

#include "dynlist/oracle.hpp"
#include "dynlist/run.hpp"

using namespace dynlist;

namespace {

// Rounds per second of the simulator under random churn, per algorithm.
void BM_RandomChurn(benchmark::State& state) {
  const auto kind = static_cast<AlgorithmKind>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const Scenario s = gen_random_churn(n, 500, 0.02, 0.02, 1);
  RunConfig cfg;
  cfg.algorithm.kind = kind;
  std::size_t messages = 0;
  for (auto _ : state) {
    const auto r = run(s, cfg);
    messages = r.metrics.messages;
    benchmark::DoNotOptimize(messages);
  }
  state.SetLabel(std::string(algorithm_name(kind)));
  state.counters["rounds/s"] =
      benchmark::Counter(static_cast<double>(s.slots.size()),
                         benchmark::Counter::kIsIterationInvariantRate);
  state.counters["messages"] = static_cast<double>(messages);
}

void churn_args(benchmark::internal::Benchmark* b) {
  for (auto kind : all_algorithms())
    for (int n : {16, 32}) b->Args({static_cast<int>(kind), n});
}

BENCHMARK(BM_RandomChurn)->Apply(churn_args)->Unit(benchmark::kMillisecond);

// Cost of one full verification sweep, relative to plain simulation.
void BM_VerifiedRun(benchmark::State& state) {
  const Scenario s = gen_random_churn(16, 300, 0.05, 0.05, 2);
  RunConfig cfg;
  cfg.algorithm.kind = static_cast<AlgorithmKind>(state.range(0));
  cfg.verify = true;
  for (auto _ : state) benchmark::DoNotOptimize(run(s, cfg).verify->mismatches);
  state.SetLabel(std::string(algorithm_name(cfg.algorithm.kind)));
}

BENCHMARK(BM_VerifiedRun)
    ->Arg(static_cast<int>(AlgorithmKind::Robust2Hop))
    ->Arg(static_cast<int>(AlgorithmKind::Triangle))
    ->Arg(static_cast<int>(AlgorithmKind::Cycles45))
    ->Unit(benchmark::kMillisecond);

void BM_OracleRobust3Hop(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Scenario s = gen_random_churn(n, 50, 0.05, 0.0, 3);
  GraphState g(n);
  Round r = 0;
  for (const auto& slot : s.slots) g.apply_changes(++r, slot.changes);
  for (auto _ : state)
    for (NodeId v = 0; v < n; ++v) benchmark::DoNotOptimize(robust_3hop(g, v).size());
}

BENCHMARK(BM_OracleRobust3Hop)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_EnumerateCycles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Scenario s = gen_random_churn(n, 1, 0.3, 0.0, 4);
  GraphState g(n);
  g.apply_changes(1, s.slots.front().changes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_cycles(g, 4).size());
    benchmark::DoNotOptimize(enumerate_cycles(g, 5).size());
  }
}

BENCHMARK(BM_EnumerateCycles)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
