#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilgeo/defaults.hpp"
#include "nilgeo/matrix.hpp"

namespace nilgeo::cli {

// One parsed invocation. run() executes it, writes the report to
// cfg.output (stdout when empty) and returns the exit status: 0 success,
// 1 input error, 2 numerical failure. Reports embed the effective config.
struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string output;

  std::uint64_t seed = 0;
  double tol_group = defaults::group_tol;
  double tol_integer = defaults::integer_tol;
  std::optional<double> horizon;
  int samples = 1000;
  int dir_samples = 50;
  std::string mode = "float";  // or "exact"
  std::string format = "json";  // or "csv"

  // jacobi-verify
  Vec z_coords;
  double t_min = 0.1;
  double t_max = 20.0;
  int t_steps = 200;

  // sample / measure
  int p = 0;
  int q = 0;
};

int run(const RunConfig& cfg);

}  // namespace nilgeo::cli
