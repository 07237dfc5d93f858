#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cutoff/interval_set.hpp"
#include "cutoff/radial_measure.hpp"

namespace cutoff {

// Deterministic transmit/back-off rule over the node-sink distance [0, R]:
// the node transmits exactly on `transmit_set()`.
class Strategy {
 public:
  // Transmit on (0, t] (and at 0). t = 0 never transmits, t = R always does.
  static Strategy threshold(double radius, double cutoff);
  static Strategy from_intervals(double radius, std::vector<Interval> intervals);
  static Strategy never(double radius) { return threshold(radius, 0.0); }
  static Strategy always(double radius) { return threshold(radius, radius); }

  double radius() const { return radius_; }
  const IntervalSet& transmit_set() const { return transmit_; }

  // 1 when the node transmits at distance d. Throws DomainError outside [0, R].
  bool evaluate(double d) const;

  // Subjective transmission probability b = mu{d : s(d) = 1}.
  double transmit_probability(const RadialDistribution& dist) const;

  // {d in [0, R] : s(d) = 0} as a canonical interval set.
  IntervalSet backoff_complement() const;

  // The cut-off t when this is a threshold strategy (0, t], 0 when it never
  // transmits, nullopt for any other shape.
  std::optional<double> cutoff() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  Strategy(double radius, IntervalSet transmit)
      : radius_(radius), transmit_(std::move(transmit)) {}

  double radius_;
  IntervalSet transmit_;
};

using StrategyProfile = std::vector<Strategy>;

// A full game instance: the distance law plus one failure cost per node.
class GameConfig {
 public:
  // Throws DomainError unless there are at least two nodes and every cost is
  // positive and finite.
  GameConfig(RadialDistribution distribution, std::vector<double> costs);

  const RadialDistribution& distribution() const { return distribution_; }
  const std::vector<double>& costs() const { return costs_; }
  std::size_t node_count() const { return costs_.size(); }
  double radius() const { return distribution_.radius(); }
  double cost(std::size_t i) const { return costs_.at(i); }

  // Break-even success probability c_i / (1 + c_i).
  double success_target(std::size_t i) const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;

 private:
  RadialDistribution distribution_;
  std::vector<double> costs_;
};

// Throws DomainError when the profile size or any strategy radius does not
// match the game.
void validate_profile(const StrategyProfile& profile, const GameConfig& cfg);

// Throws std::out_of_range for i >= n.
void check_node_index(const GameConfig& cfg, std::size_t i);

StrategyProfile threshold_profile(const GameConfig& cfg,
                                  const std::vector<double>& cutoffs);

}  // namespace cutoff
