#include "cutoff/success_prob.hpp"

#include <algorithm>

#include "cutoff/errors.hpp"

namespace cutoff {

double opponent_factor(const Strategy& opponent, const RadialDistribution& dist,
                       double d) {
  const double radius = dist.radius();
  if (!(d >= 0.0 && d <= radius)) {
    throw DomainError("distance outside [0, R]");
  }
  const IntervalSet farther{{d, radius}};
  return farther.unite(opponent.backoff_complement()).measure(dist);
}

double success_probability(const StrategyProfile& profile, const GameConfig& cfg,
                           std::size_t i, double d) {
  check_node_index(cfg, i);
  validate_profile(profile, cfg);
  double g = 1.0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == i) continue;
    g *= opponent_factor(profile[j], cfg.distribution(), d);
  }
  return g;
}

std::vector<double> opponent_breakpoints(const StrategyProfile& profile,
                                         const GameConfig& cfg, std::size_t i) {
  check_node_index(cfg, i);
  validate_profile(profile, cfg);
  std::vector<double> points{0.0, cfg.radius()};
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (j == i) continue;
    const auto ends = profile[j].transmit_set().endpoints();
    points.insert(points.end(), ends.begin(), ends.end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<double> uniform_grid(double radius, std::size_t count) {
  if (count < 2) throw DomainError("grid needs at least two points");
  std::vector<double> grid(count);
  const double denom = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    grid[k] = radius * (static_cast<double>(k) / denom);
  }
  grid.back() = radius;
  return grid;
}

SuccessCurve success_curve_at(const StrategyProfile& profile, const GameConfig& cfg,
                              std::size_t i, std::span<const double> grid) {
  SuccessCurve curve;
  curve.node_index = i;
  curve.breakpoints = opponent_breakpoints(profile, cfg, i);
  curve.grid.assign(grid.begin(), grid.end());
  curve.values.reserve(grid.size());
  for (double d : grid) {
    curve.values.push_back(success_probability(profile, cfg, i, d));
  }
  return curve;
}

SuccessCurve success_curve(const StrategyProfile& profile, const GameConfig& cfg,
                           std::size_t i, std::size_t grid_size) {
  auto grid = uniform_grid(cfg.radius(), grid_size);
  const auto breaks = opponent_breakpoints(profile, cfg, i);
  grid.insert(grid.end(), breaks.begin(), breaks.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return success_curve_at(profile, cfg, i, grid);
}

}  // namespace cutoff
