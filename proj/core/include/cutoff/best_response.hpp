#pragma once

#include <cstddef>

#include "cutoff/strategy.hpp"

namespace cutoff {

// How the best-response cut-off was reached.
enum class BoundaryCase {
  kInterior,      // E hits zero at some t in (0, R).
  kFullTransmit,  // E(R) > 0: transmit everywhere.
  kBoundaryZero,  // E(R) = 0 and E > 0 on [0, R): transmit on [0, R).
};

const char* to_string(BoundaryCase c);

struct BestResponseOptions {
  // Bracket width at which bisection stops, relative to R.
  double distance_tol = 1e-10;
  // |E| below this counts as zero when classifying E(R) and locating the first hit.
  double utility_tol = 1e-12;
  int max_iterations = 200;
};

struct BestResponseResult {
  double threshold = 0.0;
  BoundaryCase boundary_case = BoundaryCase::kInterior;
  double utility_at_threshold = 0.0;

  // The threshold strategy (0, t]. The back-off point itself is a null set.
  Strategy strategy(double radius) const { return Strategy::threshold(radius, threshold); }
};

// E[u_i | transmit](d) = (1 + c_i) g_i(d) - c_i.
double expected_utility_transmit(const StrategyProfile& profile, const GameConfig& cfg,
                                 std::size_t i, double d);

// Cut-off of node i's best response to the other strategies in `profile`
// (node i's own entry is ignored). Returns the first distance at which the
// expected transmit utility stops being positive. Throws NumericError when
// the bisection fails to shrink the bracket below the distance tolerance.
BestResponseResult best_response_threshold(const StrategyProfile& profile,
                                           const GameConfig& cfg, std::size_t i,
                                           const BestResponseOptions& opts = {});

}  // namespace cutoff
