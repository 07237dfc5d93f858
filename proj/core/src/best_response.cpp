#include "cutoff/best_response.hpp"

#include <cmath>
#include <string>

#include "cutoff/errors.hpp"
#include "cutoff/success_prob.hpp"

namespace cutoff {

const char* to_string(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::kInterior: return "interior";
    case BoundaryCase::kFullTransmit: return "full-transmit";
    case BoundaryCase::kBoundaryZero: return "boundary-zero";
  }
  return "unknown";
}

double expected_utility_transmit(const StrategyProfile& profile, const GameConfig& cfg,
                                 std::size_t i, double d) {
  const double c = cfg.cost(i);
  return (1.0 + c) * success_probability(profile, cfg, i, d) - c;
}

BestResponseResult best_response_threshold(const StrategyProfile& profile,
                                           const GameConfig& cfg, std::size_t i,
                                           const BestResponseOptions& opts) {
  if (!(opts.distance_tol > 0.0) || !(opts.utility_tol > 0.0)) {
    throw DomainError("best-response tolerances must be positive");
  }
  const double radius = cfg.radius();
  const auto utility = [&](double d) {
    return expected_utility_transmit(profile, cfg, i, d);
  };

  const double at_radius = utility(radius);
  if (at_radius > opts.utility_tol) {
    return {radius, BoundaryCase::kFullTransmit, at_radius};
  }

  // E is non-increasing, so the first breakpoint cell whose right edge is
  // already non-positive holds the first hit. Scanning cells instead of
  // bisecting [0, R] directly pins flat-at-zero stretches to their left edge.
  const auto breaks = opponent_breakpoints(profile, cfg, i);
  double lo = 0.0;
  double hi = radius;
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    if (utility(breaks[k]) <= opts.utility_tol) {
      lo = breaks[k - 1];
      hi = breaks[k];
      break;
    }
  }

  // Invariant: E(lo) > utility_tol >= E(hi).
  int iterations = 0;
  while (iterations < opts.max_iterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (utility(mid) <= opts.utility_tol) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++iterations;
  }
  if (hi - lo > opts.distance_tol * radius) {
    throw NumericError("best response for node " + std::to_string(i + 1) +
                       " did not converge: bracket [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] after " + std::to_string(iterations) +
                       " iterations");
  }

  // With E(R) zero to within utility_tol, the first hit of the tolerance band
  // can land a hair below R; that is still the boundary case.
  if (hi == radius ||
      (std::abs(at_radius) <= opts.utility_tol && radius - hi <= opts.distance_tol * radius)) {
    return {radius, BoundaryCase::kBoundaryZero, at_radius};
  }
  return {hi, BoundaryCase::kInterior, utility(hi)};
}

}  // namespace cutoff
