#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cutoff/strategy.hpp"

namespace cutoff {

// g_i sampled on a grid. `breakpoints` holds every opponent interval
// endpoint; between consecutive breakpoints g_i has a single closed form.
struct SuccessCurve {
  std::size_t node_index = 0;
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> breakpoints;
};

// q_j(d) = mu((d, R] U {x : s_j(x) = 0}): probability that opponent j does
// not beat a transmitter at distance d.
double opponent_factor(const Strategy& opponent, const RadialDistribution& dist,
                       double d);

// g_i(d), the probability that node i succeeds when it transmits from
// distance d and every other node follows `profile`: prod_{j != i} q_j(d).
double success_probability(const StrategyProfile& profile, const GameConfig& cfg,
                           std::size_t i, double d);

// Sorted endpoints of all opponents' transmit intervals, always including 0 and R.
std::vector<double> opponent_breakpoints(const StrategyProfile& profile,
                                         const GameConfig& cfg, std::size_t i);

// Evaluates g_i on a uniform grid of `grid_size` points joined with the
// opponent breakpoints. Throws DomainError for grid_size < 2.
SuccessCurve success_curve(const StrategyProfile& profile, const GameConfig& cfg,
                           std::size_t i, std::size_t grid_size);

// Evaluates g_i on exactly the supplied distances.
SuccessCurve success_curve_at(const StrategyProfile& profile, const GameConfig& cfg,
                              std::size_t i, std::span<const double> grid);

// `count` equally spaced points from 0 to R inclusive, with the last point
// pinned to R exactly.
std::vector<double> uniform_grid(double radius, std::size_t count);

}  // namespace cutoff
