#include <gtest/gtest.h>

#include <random>

#include "cutoff/errors.hpp"
#include "cutoff/strategy.hpp"
#include "support/oracles.hpp"

namespace cutoff {
namespace {

constexpr double kR = 12.0;
const auto kDisk = RadialDistribution::uniform_disk(kR);

TEST(Strategy, EvaluateThreshold) {
  const auto s = Strategy::threshold(kR, 6.0);
  EXPECT_TRUE(s.evaluate(3.0));
  EXPECT_TRUE(s.evaluate(0.0));
  EXPECT_FALSE(s.evaluate(6.0000001));
  EXPECT_THROW(s.evaluate(12.5), DomainError);
  EXPECT_THROW(s.evaluate(-0.5), DomainError);
}

TEST(Strategy, NeverTransmits) {
  const auto s = Strategy::from_intervals(kR, {});
  for (double d : {0.0, 3.0, 12.0}) EXPECT_FALSE(s.evaluate(d));
  EXPECT_EQ(s, Strategy::never(kR));
  EXPECT_EQ(s.cutoff(), 0.0);
}

TEST(Strategy, TransmitProbability) {
  EXPECT_EQ(Strategy::always(kR).transmit_probability(kDisk), 1.0);
  EXPECT_EQ(Strategy::threshold(kR, 6.0).transmit_probability(kDisk), 0.25);
  const auto two = Strategy::from_intervals(kR, {{4.0, 6.0}, {8.0, 10.0}});
  // (36 - 16)/144 + (100 - 64)/144
  EXPECT_NEAR(two.transmit_probability(kDisk), 56.0 / 144.0, 1e-15);
  EXPECT_THROW(two.transmit_probability(RadialDistribution::uniform_disk(10.0)), DomainError);
}

TEST(Strategy, BackoffComplement) {
  EXPECT_EQ(Strategy::threshold(kR, 6.0).backoff_complement(), (IntervalSet{{6.0, 12.0}}));
  EXPECT_TRUE(Strategy::always(kR).backoff_complement().empty());
  EXPECT_EQ(Strategy::from_intervals(kR, {{4.0, 6.0}, {8.0, 10.0}}).backoff_complement(),
            (IntervalSet{{0.0, 4.0}, {6.0, 8.0}, {10.0, 12.0}}));
}

TEST(Strategy, CutoffShape) {
  EXPECT_EQ(Strategy::threshold(kR, 4.5).cutoff(), 4.5);
  EXPECT_EQ(Strategy::from_intervals(kR, {{0.0, 2.0}, {2.0, 5.0}}).cutoff(), 5.0);
  EXPECT_FALSE(Strategy::from_intervals(kR, {{1.0, 5.0}}).cutoff().has_value());
  EXPECT_THROW(Strategy::threshold(kR, 13.0), DomainError);
  EXPECT_THROW(Strategy::from_intervals(kR, {{-1.0, 5.0}}), DomainError);
}

TEST(Strategy, ComplementProbabilitiesSumToOne) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 500; ++rep) {
    const auto dist = testing::random_distribution(rng, kR);
    const auto s = testing::random_strategy(rng, kR);
    EXPECT_NEAR(s.transmit_probability(dist) + s.backoff_complement().measure(dist), 1.0, 1e-12);
  }
}

TEST(GameConfig, Validation) {
  EXPECT_THROW(GameConfig(kDisk, {1.0}), DomainError);
  EXPECT_THROW(GameConfig(kDisk, {1.0, 0.0}), DomainError);
  EXPECT_THROW(GameConfig(kDisk, {1.0, -2.0}), DomainError);
  EXPECT_THROW(GameConfig(kDisk, {1.0, std::numeric_limits<double>::infinity()}), DomainError);
  const GameConfig cfg(kDisk, {3.0, 1.0});
  EXPECT_EQ(cfg.node_count(), 2u);
  EXPECT_DOUBLE_EQ(cfg.success_target(0), 0.75);
  EXPECT_THROW(check_node_index(cfg, 2), std::out_of_range);
  EXPECT_THROW(validate_profile({Strategy::always(kR)}, cfg), DomainError);
  EXPECT_THROW(validate_profile({Strategy::always(kR), Strategy::always(10.0)}, cfg), DomainError);
}

}  // namespace
}  // namespace cutoff
