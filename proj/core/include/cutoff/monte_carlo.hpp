#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cutoff/strategy.hpp"

namespace cutoff {

// Sampling is split into fixed-size chunks, each with its own generator seeded
// from (seed, chunk index). Chunk statistics are merged in chunk order, so
// results are bit-identical for any worker count.
struct SimConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0x5eed;
  std::uint64_t chunk_size = 16384;
  // 0 uses std::thread::hardware_concurrency().
  unsigned workers = 0;
};

struct SimEstimate {
  double mean = 0.0;
  // sqrt(sample variance / samples).
  double std_error = 0.0;
  std::uint64_t samples = 0;
  // Trials in which a transmitting opponent landed exactly at d. These are
  // resolved in favour of the conditioned node; the count should stay zero.
  std::uint64_t ties = 0;
};

// Fraction of trials in which node i, placed at d and forced to transmit, is
// the closest transmitter. Opponent distances are drawn by inverse-CDF
// sampling through RadialDistribution::quantile.
SimEstimate estimate_success_probability(const StrategyProfile& profile,
                                         const GameConfig& cfg, std::size_t i,
                                         double d, const SimConfig& sim);

// Mean realized utility of node i at d: +1 on success, -c_i on failure, 0 when
// its own strategy backs off at d.
SimEstimate estimate_expected_utility(const StrategyProfile& profile,
                                      const GameConfig& cfg, std::size_t i,
                                      double d, const SimConfig& sim);

// Success estimates over a distance grid. Every grid point reuses the same
// opponent draws per trial, so the estimates are exactly non-increasing in d.
std::vector<SimEstimate> estimate_success_curve(const StrategyProfile& profile,
                                                const GameConfig& cfg, std::size_t i,
                                                std::span<const double> grid,
                                                const SimConfig& sim);

}  // namespace cutoff
