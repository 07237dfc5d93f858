#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cutoff::cli {

// Process exit codes. CI scripts branch on these.
enum ExitCode : int {
  kOk = 0,
  kNotNash = 1,
  kParseError = 2,
  kDomainError = 3,
  kNumericError = 4,
};

// Everything a single command invocation needs. Paths are empty when unused;
// an empty output path means standard output.
struct RunManifest {
  std::string command;
  std::filesystem::path config;
  std::filesystem::path profile;
  std::filesystem::path out;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::size_t grid = 1001;
  // 1-based node label as typed on the command line.
  std::size_t node = 1;
  std::optional<double> distance;
  std::uint64_t samples = 100000;
  std::string quantity = "success";
  std::vector<std::size_t> n_list;
  std::vector<double> c_grid;
  double radius = 12.0;

  // Throws ConfigError when a referenced file is missing and DomainError for
  // non-positive tolerances or grids smaller than two points.
  void validate() const;
};

int cmd_success_curve(const RunManifest& m, std::ostream& out);
int cmd_cutoff_sweep(const RunManifest& m, std::ostream& out);
int cmd_equilibrium(const RunManifest& m, std::ostream& out);
int cmd_verify(const RunManifest& m, std::ostream& out);
int cmd_simulate(const RunManifest& m, std::ostream& out);

// Parses "a,b,c" or "start:stop:count" (count >= 2, inclusive endpoints).
std::vector<double> parse_real_grid(const std::string& text);

// Full command-line entry point: parses arguments, dispatches, maps
// exceptions onto ExitCode and writes diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cutoff::cli
