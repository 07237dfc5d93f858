#include "cutoff/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace cutoff {
namespace {

using nlohmann::json;

constexpr std::string_view kUniformDisk = "uniform-disk";
constexpr std::string_view kPiecewiseLinear = "piecewise-linear-cdf";

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// Wraps nlohmann access errors (missing key, wrong type) as schema errors.
template <typename Fn>
auto with_schema(std::string_view what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

JsonSyntaxError::JsonSyntaxError(const std::string& source, std::size_t line,
                                 std::size_t column, const std::string& what)
    : ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                  ": " + what),
      line_(line),
      column_(column) {}

json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonSyntaxError(source, line, column, e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

RadialDistribution distribution_from_json(const json& j) {
  const auto [kind, radius] = with_schema("distribution", [&] {
    return std::pair{j.at("kind").get<std::string>(), j.at("radius").get<double>()};
  });
  if (kind == kUniformDisk) return RadialDistribution::uniform_disk(radius);
  if (kind == kPiecewiseLinear) {
    auto knots = with_schema("distribution knots", [&] {
      std::vector<CdfKnot> out;
      for (const auto& k : j.at("knots")) {
        if (!k.is_array() || k.size() != 2) {
          throw ConfigError("distribution knots: each knot must be [d, F]");
        }
        out.push_back({k[0].get<double>(), k[1].get<double>()});
      }
      return out;
    });
    return RadialDistribution::piecewise_linear(radius, std::move(knots));
  }
  throw ConfigError("distribution: unknown kind '" + kind + "'");
}

json to_json(const RadialDistribution& dist) {
  json j;
  if (dist.kind() == RadialDistribution::Kind::kUniformDisk) {
    j["kind"] = kUniformDisk;
    j["radius"] = dist.radius();
    return j;
  }
  j["kind"] = kPiecewiseLinear;
  j["radius"] = dist.radius();
  j["knots"] = json::array();
  for (const auto& k : dist.knots()) j["knots"].push_back({k.distance, k.cumulative});
  return j;
}

GameConfig game_config_from_json(const json& j) {
  return with_schema("game config", [&] {
    if (!j.is_object()) throw ConfigError("game config must be a JSON object");
    const double radius = j.at("radius").get<double>();
    auto dist = j.contains("distribution") ? distribution_from_json(j.at("distribution"))
                                           : RadialDistribution::uniform_disk(radius);
    if (dist.radius() != radius) {
      throw DomainError("distribution radius does not match game radius");
    }
    std::vector<double> costs;
    const auto& c = j.at("costs");
    if (c.is_number()) {
      costs.assign(j.at("n").get<std::size_t>(), c.get<double>());
    } else {
      costs = c.get<std::vector<double>>();
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != costs.size()) {
      throw DomainError("\"n\" does not match the number of costs");
    }
    return GameConfig(std::move(dist), std::move(costs));
  });
}

json to_json(const GameConfig& cfg) {
  return {{"radius", cfg.radius()},
          {"n", cfg.node_count()},
          {"costs", cfg.costs()},
          {"distribution", to_json(cfg.distribution())}};
}

Strategy strategy_from_json(const json& j, double radius) {
  return with_schema("strategy", [&] {
    if (j.contains("threshold")) {
      return Strategy::threshold(radius, j.at("threshold").get<double>());
    }
    if (j.contains("intervals")) {
      std::vector<Interval> pieces;
      for (const auto& p : j.at("intervals")) {
        if (!p.is_array() || p.size() != 2) {
          throw ConfigError("strategy: each interval must be [a, b]");
        }
        pieces.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      return Strategy::from_intervals(radius, std::move(pieces));
    }
    throw ConfigError("strategy: expected \"threshold\" or \"intervals\"");
  });
}

json to_json(const Strategy& s) {
  if (const auto t = s.cutoff()) return {{"threshold", *t}};
  json pieces = json::array();
  for (const auto& p : s.transmit_set().intervals()) pieces.push_back({p.lo, p.hi});
  return {{"intervals", pieces}};
}

StrategyProfile profile_from_json(const json& j, const GameConfig& cfg) {
  if (!j.is_array()) throw ConfigError("profile must be a JSON array of strategies");
  StrategyProfile profile;
  for (const auto& s : j) profile.push_back(strategy_from_json(s, cfg.radius()));
  validate_profile(profile, cfg);
  return profile;
}

json to_json(const StrategyProfile& profile) {
  json j = json::array();
  for (const auto& s : profile) j.push_back(to_json(s));
  return j;
}

json to_json(const EquilibriumReport& report) {
  json j;
  j["thresholds"] = json::array();
  for (double t : report.profile.thresholds) j["thresholds"].push_back(number_or_null(t));
  j["last_class_full"] = report.profile.last_class_full;
  j["is_nash"] = report.is_nash;

  j["classes"] = json::array();
  for (const auto& row : report.classes) {
    json members = json::array();
    for (std::size_t m : row.cost_class.members) members.push_back(m + 1);
    j["classes"].push_back({{"rank", row.cost_class.rank + 1},
                            {"cost", row.cost_class.cost},
                            {"members", members},
                            {"threshold", number_or_null(row.threshold)},
                            {"success_value", number_or_null(row.success_value)},
                            {"target", row.target},
                            {"residual", number_or_null(row.residual)}});
  }

  j["nodes"] = json::array();
  for (const auto& node : report.nodes) {
    j["nodes"].push_back(
        {{"node", node.node + 1},
         {"declared_cutoff",
          node.declared_cutoff ? json(*node.declared_cutoff) : json(nullptr)},
         {"best_response",
          {{"threshold", node.best_response.threshold},
           {"case", to_string(node.best_response.boundary_case)},
           {"utility", node.best_response.utility_at_threshold}}},
         {"mismatch_measure", node.mismatch_measure},
         {"is_best_response", node.is_best_response}});
  }

  j["verdicts"] = json::array();
  for (const auto& v : report.verdicts) {
    j["verdicts"].push_back({{"name", v.name},
                             {"applicable", v.applicable},
                             {"passed", v.passed},
                             {"residual", number_or_null(v.residual)},
                             {"detail", v.detail}});
  }
  return j;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& out, const SuccessCurve& curve) {
  out << "d,g\n";
  for (std::size_t k = 0; k < curve.grid.size(); ++k) {
    out << format_number(curve.grid[k]) << ',' << format_number(curve.values[k]) << '\n';
  }
}

void write_estimates_csv(std::ostream& out, std::span<const double> grid,
                         std::span<const SimEstimate> estimates) {
  out << "d,estimate,std_error\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out << format_number(grid[k]) << ',' << format_number(estimates[k].mean) << ','
        << format_number(estimates[k].std_error) << '\n';
  }
}

}  // namespace cutoff
