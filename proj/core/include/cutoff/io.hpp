#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cutoff/equilibrium.hpp"
#include "cutoff/errors.hpp"
#include "cutoff/monte_carlo.hpp"
#include "cutoff/strategy.hpp"
#include "cutoff/success_prob.hpp"

namespace cutoff {

// Malformed JSON text, with the 1-based position of the offending byte.
class JsonSyntaxError : public ConfigError {
 public:
  JsonSyntaxError(const std::string& source, std::size_t line, std::size_t column,
                  const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

nlohmann::json parse_json(std::string_view text, const std::string& source = "<input>");
nlohmann::json read_json_file(const std::filesystem::path& path);

// {"kind":"uniform-disk","radius":R} or
// {"kind":"piecewise-linear-cdf","radius":R,"knots":[[d,F],...]}.
RadialDistribution distribution_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RadialDistribution& dist);

// {"radius":R, "n":n, "costs":[...], "distribution":{...}}. "distribution"
// defaults to the uniform disk; "n" is optional when "costs" is an array and
// required when it is a single number shared by every node.
GameConfig game_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GameConfig& cfg);

// {"threshold": t} or {"intervals": [[a,b],...]}.
Strategy strategy_from_json(const nlohmann::json& j, double radius);
nlohmann::json to_json(const Strategy& s);

// JSON array with one strategy per node.
StrategyProfile profile_from_json(const nlohmann::json& j, const GameConfig& cfg);
nlohmann::json to_json(const StrategyProfile& profile);

// Node indices and class ranks are written 1-based.
nlohmann::json to_json(const EquilibriumReport& report);

// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

// "d,g" header plus one row per grid point.
void write_curve_csv(std::ostream& out, const SuccessCurve& curve);
// "d,estimate,std_error" header plus one row per point.
void write_estimates_csv(std::ostream& out, std::span<const double> grid,
                         std::span<const SimEstimate> estimates);

}  // namespace cutoff
