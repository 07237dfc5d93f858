#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cutoff/io.hpp"

namespace cutoff {
namespace {

constexpr double kR = 12.0;
const std::filesystem::path kConfigs = CUTOFF_CONFIG_DIR;

TEST(Json, SyntaxErrorCarriesPosition) {
  try {
    parse_json("{\n  \"radius\": 12,\n  \"costs\": [1, 2,, 3]\n}", "bad.json");
    FAIL() << "expected JsonSyntaxError";
  } catch (const JsonSyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 18u);
    EXPECT_NE(std::string(e.what()).find("bad.json:3:18"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_json_file(kConfigs / "does-not-exist.json"), ConfigError);
}

TEST(Json, DistributionRoundTrip) {
  const auto disk = RadialDistribution::uniform_disk(kR);
  EXPECT_EQ(distribution_from_json(to_json(disk)), disk);
  const auto pw = RadialDistribution::piecewise_linear(
      kR, {{0.0, 0.0}, {2.5, 0.1}, {7.0, 0.6}, {12.0, 1.0}});
  EXPECT_EQ(distribution_from_json(to_json(pw)), pw);
  EXPECT_THROW(distribution_from_json(parse_json(R"({"kind":"gaussian","radius":1})")),
               ConfigError);
  EXPECT_THROW(distribution_from_json(parse_json(
                   R"({"kind":"piecewise-linear-cdf","radius":1,"knots":[[0,0],[1,0.5]]})")),
               DomainError);
}

TEST(Json, GameConfigForms) {
  const auto shared = game_config_from_json(parse_json(R"({"radius":12,"n":3,"costs":2})"));
  EXPECT_EQ(shared.costs(), (std::vector<double>{2.0, 2.0, 2.0}));
  EXPECT_EQ(shared.distribution(), RadialDistribution::uniform_disk(kR));
  EXPECT_EQ(game_config_from_json(to_json(shared)), shared);

  EXPECT_THROW(game_config_from_json(parse_json(R"({"radius":12,"costs":2})")), ConfigError);
  EXPECT_THROW(game_config_from_json(parse_json(R"({"radius":12,"n":3,"costs":[1,2]})")),
               DomainError);
  EXPECT_THROW(game_config_from_json(parse_json(R"({"radius":12,"costs":[1,-1]})")), DomainError);
  EXPECT_THROW(game_config_from_json(parse_json(R"({"radius":"twelve","costs":[1,1]})")),
               ConfigError);
  EXPECT_THROW(game_config_from_json(parse_json(
                   R"({"radius":12,"costs":[1,1],"distribution":{"kind":"uniform-disk","radius":10}})")),
               DomainError);
  EXPECT_THROW(game_config_from_json(parse_json("[1,2]")), ConfigError);
}

TEST(Json, StrategyAndProfileRoundTrip) {
  const auto s = Strategy::from_intervals(kR, {{0.0, 1.5}, {4.25, 9.0}});
  EXPECT_EQ(strategy_from_json(to_json(s), kR), s);
  EXPECT_EQ(strategy_from_json(parse_json(R"({"threshold":6})"), kR), Strategy::threshold(kR, 6.0));
  EXPECT_THROW(strategy_from_json(parse_json(R"({"cutoff":6})"), kR), ConfigError);
  EXPECT_THROW(strategy_from_json(parse_json(R"({"threshold":13})"), kR), DomainError);

  const GameConfig cfg(RadialDistribution::uniform_disk(kR), {1.0, 1.0});
  const StrategyProfile p{s, Strategy::never(kR)};
  EXPECT_EQ(profile_from_json(to_json(p), cfg), p);
  EXPECT_THROW(profile_from_json(parse_json(R"([{"threshold":1}])"), cfg), DomainError);
}

TEST(Json, BundledConfigsRoundTrip) {
  std::size_t games = 0;
  std::size_t profiles = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(kConfigs)) {
    if (entry.path().extension() != ".json") continue;
    const auto j = read_json_file(entry.path());
    if (j.is_object()) {
      const auto cfg = game_config_from_json(j);
      EXPECT_EQ(game_config_from_json(parse_json(to_json(cfg).dump())), cfg) << entry.path();
      ++games;
    } else {
      // Every bundled profile is for the R = 12 disk.
      StrategyProfile p;
      for (const auto& s : j) p.push_back(strategy_from_json(s, kR));
      StrategyProfile back;
      for (const auto& s : parse_json(to_json(p).dump())) back.push_back(strategy_from_json(s, kR));
      EXPECT_EQ(back, p) << entry.path();
      ++profiles;
    }
  }
  EXPECT_GE(games, 4u);
  EXPECT_GE(profiles, 7u);
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_number(0.75), "0.75");
  EXPECT_EQ(format_number(12.0), "12");
  EXPECT_EQ(format_number(8.485281374238571), "8.485281374238571");
  EXPECT_EQ(std::stod(format_number(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Csv, CurveAndEstimates) {
  SuccessCurve curve;
  curve.grid = {0.0, 12.0};
  curve.values = {1.0, 0.25};
  std::ostringstream a;
  write_curve_csv(a, curve);
  EXPECT_EQ(a.str(), "d,g\n0,1\n12,0.25\n");

  const double grid[] = {3.0};
  const SimEstimate est[] = {{0.5, 0.01, 100, 0}};
  std::ostringstream b;
  write_estimates_csv(b, grid, est);
  EXPECT_EQ(b.str(), "d,estimate,std_error\n3,0.5,0.01\n");
}

TEST(Json, ReportUsesOneBasedLabels) {
  const GameConfig cfg(RadialDistribution::uniform_disk(kR), {3.0, 1.0});
  const auto j = to_json(solve_sequential(cfg));
  EXPECT_EQ(j.at("thresholds").at(1).get<double>(), 12.0);
  EXPECT_EQ(j.at("classes").at(0).at("members").at(0).get<int>(), 1);
  EXPECT_EQ(j.at("nodes").at(1).at("node").get<int>(), 2);
  EXPECT_TRUE(j.at("is_nash").get<bool>());
}

}  // namespace
}  // namespace cutoff
