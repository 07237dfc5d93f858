#include "cutoff/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "cutoff/errors.hpp"

namespace cutoff {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ChunkCounts {
  std::vector<std::uint64_t> successes;
  std::vector<std::uint64_t> ties;
  std::uint64_t trials = 0;
};

// Runs `body(rng, trials, counts)` over every chunk and sums the counts in
// chunk order.
template <typename Body>
ChunkCounts run_chunks(const SimConfig& sim, std::size_t points, Body body) {
  if (sim.samples == 0) throw DomainError("simulation needs at least one sample");
  if (sim.chunk_size == 0) throw DomainError("chunk size must be positive");
  const std::uint64_t chunks = (sim.samples + sim.chunk_size - 1) / sim.chunk_size;
  std::vector<ChunkCounts> results(chunks);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = c * sim.chunk_size;
      const std::uint64_t trials = std::min(sim.chunk_size, sim.samples - begin);
      std::mt19937_64 rng(splitmix64(sim.seed ^ splitmix64(c + 1)));
      ChunkCounts& out = results[c];
      out.successes.assign(points, 0);
      out.ties.assign(points, 0);
      out.trials = trials;
      body(rng, trials, out);
    }
  };

  unsigned workers = sim.workers ? sim.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, chunks));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  ChunkCounts total;
  total.successes.assign(points, 0);
  total.ties.assign(points, 0);
  for (const auto& r : results) {
    for (std::size_t k = 0; k < points; ++k) {
      total.successes[k] += r.successes[k];
      total.ties[k] += r.ties[k];
    }
    total.trials += r.trials;
  }
  return total;
}

// Distance of the nearest transmitting opponent, +inf when all back off.
double nearest_transmitter(const StrategyProfile& profile, const RadialDistribution& dist,
                           std::size_t i, std::mt19937_64& rng) {
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == i) continue;
    const double dj = dist.quantile(unit_uniform(rng));
    if (dj < nearest && profile[j].evaluate(dj)) nearest = dj;
  }
  return nearest;
}

// Two-point payoff {win, lose} with `wins` out of `trials`.
SimEstimate two_point_estimate(std::uint64_t wins, std::uint64_t trials, double win,
                               double lose, std::uint64_t ties) {
  SimEstimate est;
  est.samples = trials;
  est.ties = ties;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(wins) / n;
  est.mean = lose + (win - lose) * p;
  if (trials > 1) {
    const double spread = win - lose;
    const double variance = spread * spread * p * (1.0 - p) * n / (n - 1.0);
    est.std_error = std::sqrt(variance / n);
  }
  return est;
}

void check_inputs(const StrategyProfile& profile, const GameConfig& cfg, std::size_t i,
                  double d) {
  check_node_index(cfg, i);
  validate_profile(profile, cfg);
  if (!(d >= 0.0 && d <= cfg.radius())) throw DomainError("distance outside [0, R]");
}

ChunkCounts success_counts(const StrategyProfile& profile, const GameConfig& cfg,
                           std::size_t i, std::span<const double> grid,
                           const SimConfig& sim) {
  for (double d : grid) check_inputs(profile, cfg, i, d);
  const auto& dist = cfg.distribution();
  return run_chunks(sim, grid.size(), [&](std::mt19937_64& rng, std::uint64_t trials,
                                          ChunkCounts& out) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      const double nearest = nearest_transmitter(profile, dist, i, rng);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (nearest >= grid[k]) ++out.successes[k];
        if (nearest == grid[k]) ++out.ties[k];
      }
    }
  });
}

}  // namespace

std::vector<SimEstimate> estimate_success_curve(const StrategyProfile& profile,
                                                const GameConfig& cfg, std::size_t i,
                                                std::span<const double> grid,
                                                const SimConfig& sim) {
  const auto totals = success_counts(profile, cfg, i, grid, sim);
  std::vector<SimEstimate> out;
  out.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.push_back(two_point_estimate(totals.successes[k], totals.trials, 1.0, 0.0,
                                     totals.ties[k]));
  }
  return out;
}

SimEstimate estimate_success_probability(const StrategyProfile& profile,
                                         const GameConfig& cfg, std::size_t i,
                                         double d, const SimConfig& sim) {
  const double grid[] = {d};
  return estimate_success_curve(profile, cfg, i, grid, sim).front();
}

SimEstimate estimate_expected_utility(const StrategyProfile& profile,
                                      const GameConfig& cfg, std::size_t i,
                                      double d, const SimConfig& sim) {
  check_inputs(profile, cfg, i, d);
  if (!profile[i].evaluate(d)) {
    SimEstimate silent;
    silent.samples = sim.samples;
    return silent;
  }
  const double grid[] = {d};
  const auto totals = success_counts(profile, cfg, i, grid, sim);
  return two_point_estimate(totals.successes[0], totals.trials, 1.0, -cfg.cost(i),
                            totals.ties[0]);
}

}  // namespace cutoff
