#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cutoff/equilibrium.hpp"
#include "cutoff/errors.hpp"
#include "cutoff/success_prob.hpp"
#include "support/oracles.hpp"

namespace cutoff {
namespace {

constexpr double kR = 12.0;
const auto kDisk = RadialDistribution::uniform_disk(kR);

TEST(SymmetricUniform, WorkedValues) {
  EXPECT_NEAR(solve_symmetric_uniform(2, 1.0, kR), 8.485281374238571, 1e-12);
  // 12 sqrt(1 - 2^(-1/2))
  EXPECT_NEAR(solve_symmetric_uniform(3, 1.0, kR), 6.494353201754363, 1e-12);

  const GameConfig three(kDisk, {1.0, 1.0, 1.0});
  const double t = solve_symmetric_uniform(3, 1.0, kR);
  const auto p = threshold_profile(three, {t, t, t});
  EXPECT_NEAR(success_probability(p, three, 0, t), 0.5, 1e-12);
}

TEST(SymmetricUniform, MonotoneInCostAndNodes) {
  double previous = kR;
  for (double c : {1e-9, 1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double t = solve_symmetric_uniform(4, c, kR);
    EXPECT_GT(t, 0.0);
    EXPECT_LT(t, previous);
    previous = t;
  }
  EXPECT_NEAR(solve_symmetric_uniform(4, 1e-12, kR), kR, 1e-3);
  for (double c : {0.1, 1.0, 10.0}) {
    for (std::size_t n = 2; n < 60; ++n) {
      EXPECT_LT(solve_symmetric_uniform(n + 1, c, kR), solve_symmetric_uniform(n, c, kR));
    }
  }
  EXPECT_THROW(solve_symmetric_uniform(1, 1.0, kR), DomainError);
  EXPECT_THROW(solve_symmetric_uniform(3, 0.0, kR), DomainError);
}

TEST(CostClasses, PartitionByExactCost) {
  const std::vector<double> costs{1.0, 3.0, 1.0, 2.0, 3.0};
  const auto classes = partition_cost_classes(costs);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0].cost, 3.0);
  EXPECT_EQ(classes[0].members, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(classes[1].cost, 2.0);
  EXPECT_EQ(classes[2].members, (std::vector<std::size_t>{0, 2}));
  for (std::size_t k = 0; k < classes.size(); ++k) EXPECT_EQ(classes[k].rank, k);
}

TEST(SolveSequential, TwoSingletonClasses) {
  const GameConfig cfg(kDisk, {3.0, 1.0});
  const auto report = solve_sequential(cfg);
  ASSERT_EQ(report.profile.thresholds.size(), 2u);
  EXPECT_NEAR(report.profile.thresholds[0], 6.0, 1e-9);
  EXPECT_EQ(report.profile.thresholds[1], 12.0);
  EXPECT_TRUE(report.profile.last_class_full);
  EXPECT_TRUE(report.is_nash);
  EXPECT_TRUE(report.all_verdicts_pass());
  // g_2(R) = 3/4 >= 1/2
  EXPECT_NEAR(report.classes[1].success_value, 0.75, 1e-12);
  EXPECT_EQ(report.classes[1].residual, 0.0);

  const auto p = threshold_profile(cfg, report.profile.thresholds);
  EXPECT_NEAR(best_response_threshold(p, cfg, 0).threshold, 6.0, 1e-9);
  EXPECT_EQ(best_response_threshold(p, cfg, 1).boundary_case, BoundaryCase::kFullTransmit);
}

TEST(SolveSequential, RepeatedExpensiveClass) {
  const GameConfig cfg(kDisk, {3.0, 3.0, 1.0});
  const auto report = solve_sequential(cfg);
  // (1 - F(t))^2 = 3/4  =>  t = 12 sqrt(1 - sqrt(3)/2)
  EXPECT_NEAR(report.profile.thresholds[0], 4.392304845413264, 1e-9);
  EXPECT_EQ(report.profile.thresholds[0], report.profile.thresholds[1]);
  EXPECT_EQ(report.profile.thresholds[2], 12.0);
  EXPECT_LE(report.classes[0].residual, 1e-10);
  EXPECT_TRUE(report.is_nash);

  const auto damped = damped_best_response(cfg);
  ASSERT_TRUE(damped.converged);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(damped.thresholds[i], report.profile.thresholds[i], 1e-8) << i;
  }
}

TEST(SolveSequential, SingleClassMatchesClosedForm) {
  for (std::size_t n = 2; n <= 50; ++n) {
    for (double c : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const GameConfig cfg(kDisk, std::vector<double>(n, c));
      const auto report = solve_sequential(cfg);
      ASSERT_NEAR(report.profile.thresholds[0], solve_symmetric_uniform(n, c, kR), 1e-9 * kR)
          << "n=" << n << " c=" << c;
      ASSERT_FALSE(report.profile.last_class_full);
    }
  }
}

TEST(SolveSequential, DampedIterationAgreesOnSymmetricGame) {
  const GameConfig cfg(kDisk, {1.0, 1.0, 1.0, 1.0});
  const auto damped = damped_best_response(cfg);
  ASSERT_TRUE(damped.converged);
  for (double t : damped.thresholds) EXPECT_NEAR(t, solve_symmetric_uniform(4, 1.0, kR), 1e-8);
}

TEST(SolveSequential, RequiresStrictlyIncreasingCdf) {
  const auto flat = RadialDistribution::piecewise_linear(
      kR, {{0.0, 0.0}, {4.0, 0.5}, {6.0, 0.5}, {12.0, 1.0}});
  EXPECT_THROW(solve_sequential(GameConfig(flat, {1.0, 1.0})), DomainError);
}

TEST(VerifyNash, BothAlwaysTransmitIsNotEquilibrium) {
  const GameConfig cfg(kDisk, {1.0, 1.0});
  const auto report = verify_nash({Strategy::always(kR), Strategy::always(kR)}, cfg);
  EXPECT_FALSE(report.is_nash);
  EXPECT_NEAR(report.nodes[0].best_response.threshold, 8.485281374238571, 1e-9);
  EXPECT_FALSE(report.verdict(kVerdictAtMostOneFull)->passed);
}

TEST(VerifyNash, PerturbedSymmetricProfileFails) {
  const GameConfig cfg(kDisk, {1.0, 1.0, 1.0});
  const double t = solve_symmetric_uniform(3, 1.0, kR);
  const auto good = verify_nash(threshold_profile(cfg, {t, t, t}), cfg);
  EXPECT_TRUE(good.is_nash);
  EXPECT_TRUE(good.all_verdicts_pass());

  const double bumped = t + 0.5;
  const auto p = threshold_profile(cfg, {bumped, bumped, bumped});
  const auto report = verify_nash(p, cfg);
  EXPECT_FALSE(report.is_nash);
  const auto* break_even = report.verdict(kVerdictBreakEven);
  ASSERT_NE(break_even, nullptr);
  EXPECT_FALSE(break_even->passed);
  EXPECT_NEAR(break_even->residual, std::abs(success_probability(p, cfg, 0, bumped) - 0.5), 1e-15);
  EXPECT_GT(break_even->residual, 0.01);
}

TEST(VerifyNash, NonThresholdProfileFailsStructuralVerdicts) {
  const GameConfig cfg(kDisk, {1.0, 1.0});
  const auto report = verify_nash(
      {Strategy::from_intervals(kR, {{2.0, 5.0}}), Strategy::always(kR)}, cfg);
  EXPECT_FALSE(report.is_nash);
  EXPECT_FALSE(report.verdict(kVerdictBreakEven)->passed);
  EXPECT_FALSE(report.verdict(kVerdictSufficient)->applicable);
  EXPECT_TRUE(std::isnan(report.profile.thresholds[0]));
}

TEST(VerifyNash, UnequalCutoffsWithinClassFail) {
  const GameConfig cfg(kDisk, {2.0, 2.0, 2.0});
  const double t = solve_symmetric_uniform(3, 2.0, kR);
  const auto report = verify_nash(threshold_profile(cfg, {t, t, t + 1e-3}), cfg);
  EXPECT_FALSE(report.verdict(kVerdictEqualCostsEqualCutoffs)->passed);
  EXPECT_NEAR(report.verdict(kVerdictEqualCostsEqualCutoffs)->residual, 1e-3, 1e-12);
}

TEST(VerifyNash, SolvedRandomConfigsVerify) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> nodes(2, 8);
  for (int rep = 0; rep < 60; ++rep) {
    const auto dist = testing::random_distribution(rng, kR);
    const GameConfig cfg(dist, testing::random_costs(rng, nodes(rng)));
    const auto solved = solve_sequential(cfg);
    ASSERT_TRUE(solved.is_nash) << "rep " << rep;
    ASSERT_TRUE(solved.all_verdicts_pass()) << "rep " << rep;
    for (std::size_t k = 1; k < solved.classes.size(); ++k) {
      EXPECT_LT(solved.classes[k - 1].threshold, solved.classes[k].threshold);
    }
    const auto again = verify_nash(threshold_profile(cfg, solved.profile.thresholds), cfg);
    EXPECT_TRUE(again.is_nash);
  }
}

}  // namespace
}  // namespace cutoff
