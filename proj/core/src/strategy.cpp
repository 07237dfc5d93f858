#include "cutoff/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cutoff/errors.hpp"

namespace cutoff {

Strategy Strategy::threshold(double radius, double cutoff) {
  if (!(cutoff >= 0.0 && cutoff <= radius)) {
    throw DomainError("cut-off " + std::to_string(cutoff) + " outside [0, " +
                      std::to_string(radius) + "]");
  }
  return Strategy(radius, IntervalSet{{0.0, cutoff}});
}

Strategy Strategy::from_intervals(double radius, std::vector<Interval> intervals) {
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  for (const auto& iv : intervals) {
    if (!(iv.lo >= 0.0 && iv.hi <= radius)) {
      throw DomainError("transmit interval (" + std::to_string(iv.lo) + ", " +
                        std::to_string(iv.hi) + "] leaves [0, " +
                        std::to_string(radius) + "]");
    }
  }
  return Strategy(radius, IntervalSet(std::move(intervals)));
}

bool Strategy::evaluate(double d) const {
  if (!(d >= 0.0 && d <= radius_)) {
    throw DomainError("distance " + std::to_string(d) + " outside [0, " +
                      std::to_string(radius_) + "]");
  }
  return transmit_.contains(d);
}

double Strategy::transmit_probability(const RadialDistribution& dist) const {
  if (dist.radius() != radius_) {
    throw DomainError("strategy radius does not match distribution radius");
  }
  return transmit_.measure(dist);
}

IntervalSet Strategy::backoff_complement() const {
  return transmit_.complement(0.0, radius_);
}

std::optional<double> Strategy::cutoff() const {
  if (transmit_.empty()) return 0.0;
  if (transmit_.size() == 1 && transmit_.intervals().front().lo == 0.0) {
    return transmit_.intervals().front().hi;
  }
  return std::nullopt;
}

GameConfig::GameConfig(RadialDistribution distribution, std::vector<double> costs)
    : distribution_(std::move(distribution)), costs_(std::move(costs)) {
  if (costs_.size() < 2) {
    throw DomainError("a game needs at least two nodes");
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    if (!(costs_[i] > 0.0) || !std::isfinite(costs_[i])) {
      throw DomainError("cost of node " + std::to_string(i + 1) +
                        " must be positive and finite");
    }
  }
}

double GameConfig::success_target(std::size_t i) const {
  const double c = cost(i);
  return c / (1.0 + c);
}

void check_node_index(const GameConfig& cfg, std::size_t i) {
  if (i >= cfg.node_count()) {
    throw std::out_of_range("node index " + std::to_string(i) + " out of range for " +
                            std::to_string(cfg.node_count()) + " nodes");
  }
}

void validate_profile(const StrategyProfile& profile, const GameConfig& cfg) {
  if (profile.size() != cfg.node_count()) {
    throw DomainError("profile has " + std::to_string(profile.size()) +
                      " strategies for " + std::to_string(cfg.node_count()) + " nodes");
  }
  for (const auto& s : profile) {
    if (s.radius() != cfg.radius()) {
      throw DomainError("strategy radius does not match game radius");
    }
  }
}

StrategyProfile threshold_profile(const GameConfig& cfg,
                                  const std::vector<double>& cutoffs) {
  StrategyProfile profile;
  profile.reserve(cutoffs.size());
  for (double t : cutoffs) profile.push_back(Strategy::threshold(cfg.radius(), t));
  validate_profile(profile, cfg);
  return profile;
}

}  // namespace cutoff
