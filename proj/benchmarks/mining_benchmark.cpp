#include <benchmark/benchmark.h>

#include "cochange/miners.hpp"
#include "cochange/rules.hpp"
#include "cochange/synth.hpp"
#include "cochange/vertical.hpp"

namespace {

using namespace cochange;

TransactionDatabase benchmark_db(std::uint32_t transactions) {
  SynthConfig config;
  config.seed = 20240601;
  config.items = 120;
  config.transactions = transactions;
  config.density = 0.04;
  config.pattern_groups = 6;
  config.group_probability = 0.3;
  return make_synthetic_db(config);
}

void run_miner(benchmark::State& state, Algorithm algorithm) {
  const auto db = benchmark_db(static_cast<std::uint32_t>(state.range(0)));
  const MiningParams params{0.2, 0.1};
  for (auto _ : state) {
    auto itemsets = mine(algorithm, db, params);
    auto rules = generate_rules(itemsets, params);
    benchmark::DoNotOptimize(rules);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(db.size()));
}

void BM_Apriori(benchmark::State& state) {
  run_miner(state, Algorithm::apriori);
}
void BM_FPGrowth(benchmark::State& state) {
  run_miner(state, Algorithm::fp_growth);
}
void BM_Eclat(benchmark::State& state) { run_miner(state, Algorithm::eclat); }
void BM_Relim(benchmark::State& state) { run_miner(state, Algorithm::relim); }

BENCHMARK(BM_Apriori)->Arg(1000)->Arg(5000);
BENCHMARK(BM_FPGrowth)->Arg(1000)->Arg(5000);
BENCHMARK(BM_Eclat)->Arg(1000)->Arg(5000);
BENCHMARK(BM_Relim)->Arg(1000)->Arg(5000);

void BM_ToVertical(benchmark::State& state) {
  const auto db = benchmark_db(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto vertical = to_vertical(db);
    benchmark::DoNotOptimize(vertical);
  }
}
BENCHMARK(BM_ToVertical)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
