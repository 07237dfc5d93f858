#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cutoff/equilibrium.hpp"
#include "cutoff/errors.hpp"
#include "cutoff/io.hpp"
#include "cutoff/monte_carlo.hpp"
#include "cutoff/success_prob.hpp"

namespace cutoff::cli {
namespace {

struct LoadedGame {
  GameConfig cfg;
  StrategyProfile profile;
};

GameConfig load_config(const RunManifest& m) {
  return game_config_from_json(read_json_file(m.config));
}

LoadedGame load_game(const RunManifest& m) {
  auto cfg = load_config(m);
  auto profile = profile_from_json(read_json_file(m.profile), cfg);
  return {std::move(cfg), std::move(profile)};
}

std::size_t node_index(const RunManifest& m, const GameConfig& cfg) {
  if (m.node == 0 || m.node > cfg.node_count()) {
    throw std::out_of_range("--node " + std::to_string(m.node) + " outside 1.." +
                            std::to_string(cfg.node_count()));
  }
  return m.node - 1;
}

EquilibriumOptions equilibrium_options(const RunManifest& m) {
  EquilibriumOptions opts;
  if (m.tol) opts.residual_tol = *m.tol;
  return opts;
}

void write_report(std::ostream& out, const EquilibriumReport& report) {
  out << to_json(report).dump(2) << '\n';
}

}  // namespace

void RunManifest::validate() const {
  for (const auto* path : {&config, &profile}) {
    if (!path->empty() && !std::filesystem::exists(*path)) {
      throw ConfigError("no such file: " + path->string());
    }
  }
  if (tol && !(*tol > 0.0)) throw DomainError("--tol must be positive");
  if (grid < 2) throw DomainError("--grid must be at least 2");
  if (samples == 0) throw DomainError("--samples must be positive");
  if (quantity != "success" && quantity != "utility") {
    throw DomainError("--quantity must be 'success' or 'utility'");
  }
}

std::vector<double> parse_real_grid(const std::string& text) {
  const auto to_double = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ConfigError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw ConfigError("not a number: '" + s + "'");
    return v;
  };
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);

  std::vector<double> out;
  if (sep == ':') {
    if (parts.size() != 3) throw ConfigError("range must be start:stop:count");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const auto count = static_cast<std::size_t>(to_double(parts[2]));
    if (count < 2) throw ConfigError("range count must be at least 2");
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(start + (stop - start) * static_cast<double>(k) /
                                static_cast<double>(count - 1));
    }
    out.back() = stop;
  } else {
    for (const auto& p : parts) out.push_back(to_double(p));
  }
  return out;
}

int cmd_success_curve(const RunManifest& m, std::ostream& out) {
  const auto game = load_game(m);
  const auto curve = success_curve(game.profile, game.cfg, node_index(m, game.cfg), m.grid);
  write_curve_csv(out, curve);
  return kOk;
}

int cmd_cutoff_sweep(const RunManifest& m, std::ostream& out) {
  auto ns = m.n_list;
  auto cs = m.c_grid;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  for (double c : cs) {
    if (!(c > 0.0)) throw DomainError("sweep costs must be positive");
  }
  for (std::size_t n : ns) {
    if (n < 2) throw DomainError("sweep node counts must be at least 2");
  }
  out << "n,c,d_star\n";
  for (std::size_t n : ns) {
    for (double c : cs) {
      out << n << ',' << format_number(c) << ','
          << format_number(solve_symmetric_uniform(n, c, m.radius)) << '\n';
    }
  }
  return kOk;
}

int cmd_equilibrium(const RunManifest& m, std::ostream& out) {
  const auto cfg = load_config(m);
  const auto report = solve_sequential(cfg, equilibrium_options(m));
  write_report(out, report);
  return report.is_nash ? kOk : kNotNash;
}

int cmd_verify(const RunManifest& m, std::ostream& out) {
  const auto game = load_game(m);
  const auto report = verify_nash(game.profile, game.cfg, equilibrium_options(m));
  write_report(out, report);
  return report.is_nash ? kOk : kNotNash;
}

int cmd_simulate(const RunManifest& m, std::ostream& out) {
  const auto game = load_game(m);
  const std::size_t i = node_index(m, game.cfg);
  SimConfig sim;
  sim.samples = m.samples;
  sim.seed = m.seed;

  const auto grid = m.distance ? std::vector<double>{*m.distance}
                               : uniform_grid(game.cfg.radius(), m.grid);
  std::vector<SimEstimate> estimates;
  if (m.quantity == "success") {
    estimates = estimate_success_curve(game.profile, game.cfg, i, grid, sim);
  } else {
    for (double d : grid) {
      estimates.push_back(estimate_expected_utility(game.profile, game.cfg, i, d, sim));
    }
  }
  write_estimates_csv(out, grid, estimates);
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut-off thresholds and equilibria of the location-based random access game"};
  app.require_subcommand(1);

  RunManifest m;
  std::string c_grid = "0.05:10:200";
  m.n_list = {2, 3, 5, 10, 20, 50};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", m.out, "Output file (default: stdout)");
  };
  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", m.config, "Game config JSON")->required();
  };
  const auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", m.profile, "Strategy profile JSON")->required();
  };

  auto* curve = app.add_subcommand("curve", "Success probability g_i(d) as CSV");
  add_config(curve);
  add_profile(curve);
  curve->add_option("--node", m.node, "1-based node index")->capture_default_str();
  curve->add_option("--grid", m.grid, "Uniform grid size")->capture_default_str();
  add_common(curve);

  auto* sweep = app.add_subcommand("sweep", "Symmetric uniform cut-off over (n, c) as CSV");
  sweep->add_option("--n-list", m.n_list, "Node counts")->delimiter(',')->capture_default_str();
  sweep->add_option("--c-grid", c_grid, "Costs: a,b,c or start:stop:count")
      ->capture_default_str();
  sweep->add_option("--radius", m.radius, "Disk radius")->capture_default_str();
  add_common(sweep);

  auto* equilibrium = app.add_subcommand("equilibrium", "Solve and verify a threshold equilibrium");
  add_config(equilibrium);
  equilibrium->add_option("--tol", m.tol, "Break-even residual tolerance");
  add_common(equilibrium);

  auto* verify = app.add_subcommand("verify", "Check whether a profile is a Nash equilibrium");
  add_config(verify);
  add_profile(verify);
  verify->add_option("--tol", m.tol, "Break-even residual tolerance");
  add_common(verify);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates as CSV");
  add_config(simulate);
  add_profile(simulate);
  simulate->add_option("--node", m.node, "1-based node index")->capture_default_str();
  simulate->add_option("--d", m.distance, "Single distance (default: uniform grid)");
  simulate->add_option("--grid", m.grid, "Uniform grid size")->capture_default_str();
  simulate->add_option("--samples", m.samples, "Trials")->capture_default_str();
  simulate->add_option("--seed", m.seed, "Generator seed")->capture_default_str();
  simulate->add_option("--quantity", m.quantity, "success or utility")->capture_default_str();
  add_common(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    m.command = app.get_subcommands().front()->get_name();
    if (m.command == "sweep") m.c_grid = parse_real_grid(c_grid);
    m.validate();

    std::ostringstream buffer;
    int code = kOk;
    if (m.command == "curve") code = cmd_success_curve(m, buffer);
    else if (m.command == "sweep") code = cmd_cutoff_sweep(m, buffer);
    else if (m.command == "equilibrium") code = cmd_equilibrium(m, buffer);
    else if (m.command == "verify") code = cmd_verify(m, buffer);
    else if (m.command == "simulate") code = cmd_simulate(m, buffer);

    if (m.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(m.out, std::ios::binary);
      if (!file) throw ConfigError("cannot write " + m.out.string());
      file << buffer.str();
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::logic_error& e) {
    // domain_error, out_of_range and invalid_argument
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace cutoff::cli
