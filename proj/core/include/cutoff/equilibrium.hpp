#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutoff/best_response.hpp"
#include "cutoff/strategy.hpp"

namespace cutoff {

// Nodes sharing one failure cost. Rank 0 is the most expensive class.
struct CostClass {
  double cost = 0.0;
  std::vector<std::size_t> members;
  std::size_t rank = 0;
};

// Groups nodes by exact cost equality, ordered by strictly decreasing cost.
std::vector<CostClass> partition_cost_classes(std::span<const double> costs);

struct ThresholdProfile {
  std::vector<double> thresholds;
  // The cheapest class is a single node transmitting over all of [0, R].
  bool last_class_full = false;
};

// One row of the class table in an equilibrium report.
struct ClassSummary {
  CostClass cost_class;
  double threshold = 0.0;
  // g of a member evaluated at the class threshold.
  double success_value = 0.0;
  // c / (1 + c) for the class cost.
  double target = 0.0;
  // |g - target| for interior classes; shortfall max(0, target - g(R)) for a
  // class sitting at R.
  double residual = 0.0;
};

// Per-node comparison against an exact best-response recomputation.
struct NodeCheck {
  std::size_t node = 0;
  std::optional<double> declared_cutoff;
  BestResponseResult best_response;
  // mu of the symmetric difference between the node's transmit set and the
  // best-response set.
  double mismatch_measure = 0.0;
  bool is_best_response = false;
};

struct Verdict {
  std::string name;
  bool applicable = true;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

struct EquilibriumReport {
  ThresholdProfile profile;
  std::vector<ClassSummary> classes;
  std::vector<NodeCheck> nodes;
  std::vector<Verdict> verdicts;
  bool is_nash = false;

  // success_value of every class whose threshold is below R.
  std::vector<double> class_success_values() const;
  const Verdict* verdict(std::string_view name) const;
  bool all_verdicts_pass() const;
};

struct EquilibriumOptions {
  // Root bracket width relative to R for the sequential class solve.
  double distance_tol = 1e-10;
  // Largest accepted |g_i(t_i) - c_i / (1 + c_i)|.
  double residual_tol = 1e-8;
  // Largest mu-measure by which a strategy may differ from its best response.
  double mismatch_tol = 1e-9;
  int max_iterations = 400;
  BestResponseOptions best_response;
};

// Verdict names used in reports.
inline constexpr std::string_view kVerdictBestResponse = "best_response";
inline constexpr std::string_view kVerdictAtMostOneFull = "at_most_one_full_transmitter";
inline constexpr std::string_view kVerdictBreakEven = "break_even_residuals";
inline constexpr std::string_view kVerdictEqualCostsEqualCutoffs = "equal_costs_equal_cutoffs";
inline constexpr std::string_view kVerdictOrdering = "cutoffs_increase_as_cost_decreases";
inline constexpr std::string_view kVerdictSufficient = "sufficient_conditions";

// Symmetric cut-off for n equal-cost nodes uniform on the disk:
// d* = R sqrt(1 - (c / (1 + c))^(1 / (n - 1))).
double solve_symmetric_uniform(std::size_t n, double cost, double radius);

// Solves cost classes in order of decreasing cost. A member of class k at its
// own threshold t_k sees
//   g = P_k (1 - F(t_k))^(e_k),  P_k = prod_{l<k} (1 - F(t_l))^(size_l),
//   e_k = (size_k - 1) + sum_{l>k} size_l,
// and t_k is the root of g = c_k / (1 + c_k) on (t_{k-1}, R). A singleton
// cheapest class has e = 0 and transmits on all of [0, R].
//
// Requires a strictly increasing CDF (throws DomainError otherwise). The
// returned report carries the full verification of the solved profile.
EquilibriumReport solve_sequential(const GameConfig& cfg,
                                   const EquilibriumOptions& opts = {});

// Checks each strategy against a fresh best response and evaluates the
// necessary conditions (at most one node at R, break-even residuals, equal
// costs sharing a cut-off) and the sufficient class conditions.
EquilibriumReport verify_nash(const StrategyProfile& profile, const GameConfig& cfg,
                              const EquilibriumOptions& opts = {});

struct DampedIterationOptions {
  double damping = 0.5;
  // Convergence threshold on max |BR(t) - t|, relative to R.
  double tol = 1e-9;
  int max_rounds = 10000;
  // Starting cut-offs; R/2 for every node when empty.
  std::vector<double> initial;
  BestResponseOptions best_response;
};

struct DampedIterationResult {
  std::vector<double> thresholds;
  int rounds = 0;
  bool converged = false;
  double last_change = 0.0;
};

// Jacobi best-response iteration over threshold profiles,
// t <- t + damping * (BR(t) - t). Independent of the sequential solver.
DampedIterationResult damped_best_response(const GameConfig& cfg,
                                           const DampedIterationOptions& opts = {});

}  // namespace cutoff
