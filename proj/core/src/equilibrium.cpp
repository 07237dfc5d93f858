#include "cutoff/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "cutoff/errors.hpp"
#include "cutoff/success_prob.hpp"

namespace cutoff {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Verdict make_verdict(std::string_view name, bool passed, double residual,
                     std::string detail = {}) {
  Verdict v;
  v.name = std::string(name);
  v.passed = passed;
  v.residual = residual;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

std::vector<CostClass> partition_cost_classes(std::span<const double> costs) {
  std::map<double, std::vector<std::size_t>, std::greater<>> by_cost;
  for (std::size_t i = 0; i < costs.size(); ++i) by_cost[costs[i]].push_back(i);
  std::vector<CostClass> classes;
  classes.reserve(by_cost.size());
  for (auto& [cost, members] : by_cost) {
    classes.push_back({cost, std::move(members), classes.size()});
  }
  return classes;
}

std::vector<double> EquilibriumReport::class_success_values() const {
  std::vector<double> out;
  for (const auto& row : classes) {
    if (std::isnan(row.threshold)) continue;
    const bool at_radius = profile.last_class_full &&
                           row.cost_class.rank + 1 == classes.size();
    if (!at_radius) out.push_back(row.success_value);
  }
  return out;
}

const Verdict* EquilibriumReport::verdict(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool EquilibriumReport::all_verdicts_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed; });
}

double solve_symmetric_uniform(std::size_t n, double cost, double radius) {
  if (n < 2) throw DomainError("symmetric solve needs n >= 2");
  if (!(cost > 0.0) || !std::isfinite(cost)) throw DomainError("cost must be positive");
  if (!(radius > 0.0)) throw DomainError("radius must be positive");
  const double target = cost / (1.0 + cost);
  const double survive = std::pow(target, 1.0 / static_cast<double>(n - 1));
  return radius * std::sqrt(1.0 - survive);
}

EquilibriumReport verify_nash(const StrategyProfile& profile, const GameConfig& cfg,
                              const EquilibriumOptions& opts) {
  validate_profile(profile, cfg);
  const std::size_t n = cfg.node_count();
  const double radius = cfg.radius();
  const auto& dist = cfg.distribution();

  EquilibriumReport report;
  report.nodes.reserve(n);

  // Effective cut-off per node: its own threshold, or the best-response
  // threshold when the strategy differs from one only on a null set.
  std::vector<std::optional<double>> cutoffs(n);
  double worst_mismatch = 0.0;
  bool all_best = true;
  for (std::size_t i = 0; i < n; ++i) {
    NodeCheck check;
    check.node = i;
    check.declared_cutoff = profile[i].cutoff();
    check.best_response = best_response_threshold(profile, cfg, i, opts.best_response);
    const IntervalSet best_set{{0.0, check.best_response.threshold}};
    const auto diff = profile[i].transmit_set().symmetric_difference(best_set);
    check.mismatch_measure = diff.measure(dist);
    check.is_best_response = check.mismatch_measure <= opts.mismatch_tol ||
                             diff.lebesgue_length() <= opts.distance_tol * radius;
    worst_mismatch = std::max(worst_mismatch, check.mismatch_measure);
    all_best = all_best && check.is_best_response;
    cutoffs[i] = check.declared_cutoff;
    if (!cutoffs[i] && check.is_best_response) cutoffs[i] = check.best_response.threshold;
    report.nodes.push_back(std::move(check));
  }
  report.is_nash = all_best;
  report.verdicts.push_back(make_verdict(kVerdictBestResponse, all_best, worst_mismatch,
                                         all_best ? "" : "some node deviates from its best response"));

  const bool threshold_shaped =
      std::all_of(cutoffs.begin(), cutoffs.end(), [](const auto& t) { return t.has_value(); });
  report.profile.thresholds.resize(n, kNaN);
  for (std::size_t i = 0; i < n; ++i) {
    if (cutoffs[i]) report.profile.thresholds[i] = *cutoffs[i];
  }

  const auto classes = partition_cost_classes(cfg.costs());
  for (const auto& cls : classes) {
    ClassSummary row;
    row.cost_class = cls;
    row.target = cls.cost / (1.0 + cls.cost);
    row.threshold = report.profile.thresholds[cls.members.front()];
    if (!std::isnan(row.threshold)) {
      row.success_value = success_probability(profile, cfg, cls.members.front(), row.threshold);
      row.residual = row.threshold < radius ? std::abs(row.success_value - row.target)
                                            : std::max(0.0, row.target - row.success_value);
    } else {
      row.success_value = kNaN;
      row.residual = kNaN;
    }
    report.classes.push_back(std::move(row));
  }
  const bool last_singleton = classes.back().members.size() == 1;
  report.profile.last_class_full =
      threshold_shaped && last_singleton && report.classes.back().threshold == radius;

  if (!threshold_shaped) {
    const std::string why = "profile is not a monotone threshold profile";
    report.verdicts.push_back(make_verdict(kVerdictAtMostOneFull, false, kNaN, why));
    report.verdicts.push_back(make_verdict(kVerdictBreakEven, false, kNaN, why));
    report.verdicts.push_back(make_verdict(kVerdictEqualCostsEqualCutoffs, false, kNaN, why));
    report.verdicts.push_back(make_verdict(kVerdictOrdering, false, kNaN, why));
    Verdict sufficient = make_verdict(kVerdictSufficient, true, kNaN, why);
    sufficient.applicable = false;
    report.verdicts.push_back(std::move(sufficient));
    return report;
  }

  const auto& t = report.profile.thresholds;

  const auto at_radius = static_cast<double>(std::count(t.begin(), t.end(), radius));
  report.verdicts.push_back(make_verdict(kVerdictAtMostOneFull, at_radius <= 1.0, at_radius,
                                         at_radius <= 1.0 ? "" : "several nodes transmit on all of [0, R]"));

  double worst_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = success_probability(profile, cfg, i, t[i]);
    const double target = cfg.success_target(i);
    const double r = t[i] < radius ? std::abs(g - target) : std::max(0.0, target - g);
    worst_residual = std::max(worst_residual, r);
  }
  report.verdicts.push_back(make_verdict(kVerdictBreakEven, worst_residual <= opts.residual_tol,
                                         worst_residual));

  double worst_spread = 0.0;
  for (const auto& cls : classes) {
    double lo = t[cls.members.front()];
    double hi = lo;
    for (std::size_t m : cls.members) {
      lo = std::min(lo, t[m]);
      hi = std::max(hi, t[m]);
    }
    worst_spread = std::max(worst_spread, hi - lo);
  }
  const bool equal_cutoffs = worst_spread == 0.0;
  report.verdicts.push_back(make_verdict(kVerdictEqualCostsEqualCutoffs, equal_cutoffs, worst_spread));

  bool ordered = true;
  double worst_order = 0.0;
  for (std::size_t k = 1; k < report.classes.size(); ++k) {
    const double gap = report.classes[k].threshold - report.classes[k - 1].threshold;
    if (!(gap > 0.0)) {
      ordered = false;
      worst_order = std::max(worst_order, -gap);
    }
  }
  report.verdicts.push_back(make_verdict(kVerdictOrdering, ordered, worst_order));

  Verdict sufficient;
  sufficient.name = std::string(kVerdictSufficient);
  if (!dist.strictly_positive_density()) {
    sufficient.applicable = false;
    sufficient.passed = true;
    sufficient.detail = "distance law has flat CDF segments";
  } else {
    double worst = 0.0;
    bool holds = equal_cutoffs;
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
      const auto& row = report.classes[k];
      const bool last = k + 1 == report.classes.size();
      if (last && last_singleton) {
        holds = holds && row.threshold == radius;
      } else {
        const double r = std::abs(row.success_value - row.target);
        worst = std::max(worst, r);
        holds = holds && row.threshold < radius && r <= opts.residual_tol;
      }
    }
    sufficient.passed = holds;
    sufficient.residual = worst;
    if (!holds) sufficient.detail = "class conditions for a guaranteed equilibrium do not hold";
  }
  report.verdicts.push_back(std::move(sufficient));
  return report;
}

EquilibriumReport solve_sequential(const GameConfig& cfg, const EquilibriumOptions& opts) {
  const auto& dist = cfg.distribution();
  if (!dist.strictly_positive_density()) {
    throw DomainError("sequential solve requires a strictly increasing distance CDF");
  }
  const double radius = cfg.radius();
  const auto classes = partition_cost_classes(cfg.costs());

  std::vector<std::size_t> remaining_after(classes.size(), 0);
  for (std::size_t k = classes.size(); k-- > 1;) {
    remaining_after[k - 1] = remaining_after[k] + classes[k].members.size();
  }

  std::vector<double> thresholds(cfg.node_count(), 0.0);
  double prefix = 1.0;
  double previous = 0.0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto& cls = classes[k];
    const std::size_t exponent = cls.members.size() - 1 + remaining_after[k];
    const double target = cls.cost / (1.0 + cls.cost);

    double cutoff = radius;
    if (exponent > 0) {
      const auto e = static_cast<double>(exponent);
      const auto excess = [&](double t) {
        return prefix * std::pow(1.0 - dist.cdf(t), e) - target;
      };
      double lo = previous;
      double hi = radius;
      if (!(excess(lo) > 0.0) || !(excess(hi) < 0.0)) {
        throw NumericError("class " + std::to_string(k + 1) + " (cost " +
                           std::to_string(cls.cost) + ") has no bracketed root on (" +
                           std::to_string(lo) + ", " + std::to_string(hi) + ")");
      }
      int iterations = 0;
      while (iterations < opts.max_iterations) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) break;
        if (excess(mid) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
        ++iterations;
      }
      if (hi - lo > opts.distance_tol * radius) {
        throw NumericError("class " + std::to_string(k + 1) + " root did not converge after " +
                           std::to_string(iterations) + " iterations");
      }
      cutoff = (lo > previous && std::abs(excess(lo)) < std::abs(excess(hi))) ? lo : hi;
    }

    for (std::size_t m : cls.members) thresholds[m] = cutoff;
    prefix *= std::pow(1.0 - dist.cdf(cutoff), static_cast<double>(cls.members.size()));
    previous = cutoff;
  }

  return verify_nash(threshold_profile(cfg, thresholds), cfg, opts);
}

DampedIterationResult damped_best_response(const GameConfig& cfg,
                                           const DampedIterationOptions& opts) {
  if (!(opts.damping > 0.0 && opts.damping <= 1.0)) {
    throw DomainError("damping must lie in (0, 1]");
  }
  const std::size_t n = cfg.node_count();
  const double radius = cfg.radius();
  std::vector<double> current = opts.initial;
  if (current.empty()) current.assign(n, 0.5 * radius);
  if (current.size() != n) throw DomainError("initial cut-offs must have one entry per node");

  DampedIterationResult result;
  std::vector<double> response(n);
  for (int round = 1; round <= opts.max_rounds; ++round) {
    const auto profile = threshold_profile(cfg, current);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      response[i] = best_response_threshold(profile, cfg, i, opts.best_response).threshold;
      change = std::max(change, std::abs(response[i] - current[i]));
    }
    result.rounds = round;
    result.last_change = change;
    if (change <= opts.tol * radius) {
      result.converged = true;
      result.thresholds = response;
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) {
      current[i] += opts.damping * (response[i] - current[i]);
    }
  }
  result.thresholds = current;
  return result;
}

}  // namespace cutoff
