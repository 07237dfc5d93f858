#include <benchmark/benchmark.h>

#include <vector>

#include "cutoff/best_response.hpp"
#include "cutoff/equilibrium.hpp"
#include "cutoff/monte_carlo.hpp"
#include "cutoff/success_prob.hpp"

namespace {

cutoff::GameConfig uniform_game(std::size_t n) {
  std::vector<double> costs(n);
  for (std::size_t i = 0; i < n; ++i) costs[i] = 0.5 + static_cast<double>(i % 3);
  return {cutoff::RadialDistribution::uniform_disk(12.0), costs};
}

cutoff::StrategyProfile interval_profile(const cutoff::GameConfig& cfg) {
  cutoff::StrategyProfile profile;
  for (std::size_t i = 0; i < cfg.node_count(); ++i) {
    const double shift = 0.3 * static_cast<double>(i % 8);
    profile.push_back(cutoff::Strategy::from_intervals(
        cfg.radius(), {{0.0, 2.0 + shift}, {4.0 + shift, 6.0 + shift}, {9.0, 10.5}}));
  }
  return profile;
}

void BM_SuccessProbability(benchmark::State& state) {
  const auto cfg = uniform_game(static_cast<std::size_t>(state.range(0)));
  const auto profile = interval_profile(cfg);
  double d = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff::success_probability(profile, cfg, 0, d));
    d = d < 11.0 ? d + 0.37 : 0.0;
  }
}
BENCHMARK(BM_SuccessProbability)->Arg(2)->Arg(8)->Arg(32);

void BM_BestResponse(benchmark::State& state) {
  const auto cfg = uniform_game(static_cast<std::size_t>(state.range(0)));
  const auto profile = interval_profile(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff::best_response_threshold(profile, cfg, 0));
  }
}
BENCHMARK(BM_BestResponse)->Arg(2)->Arg(8);

void BM_SolveSequential(benchmark::State& state) {
  const auto cfg = uniform_game(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff::solve_sequential(cfg));
  }
}
BENCHMARK(BM_SolveSequential)->Arg(4)->Arg(8)->Arg(16);

void BM_MonteCarloSuccess(benchmark::State& state) {
  const auto cfg = uniform_game(4);
  const auto profile = interval_profile(cfg);
  cutoff::SimConfig sim;
  sim.samples = static_cast<std::uint64_t>(state.range(0));
  sim.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff::estimate_success_probability(profile, cfg, 0, 5.0, sim));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloSuccess)->Arg(10000)->Arg(100000);

}  // namespace

// The packaged benchmark_main archive is LTO bytecode from another compiler
// release, so the entry point is defined here.
BENCHMARK_MAIN();
