#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilgeo/cli.hpp"
#include "nilgeo/errors.hpp"

namespace {

nilgeo::Vec parse_coords(const std::string& s) {
  nilgeo::Vec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw nilgeo::BadInput("cannot parse coordinate '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjugate loci of central geodesics in 2-step nilpotent groups"};
  app.require_subcommand(1);

  nilgeo::cli::RunConfig cfg;
  std::string z_coords_raw;
  double horizon = 0.0;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("-i,--input", cfg.inputs, "input file(s)")->required();
    sub->add_option("-o,--output", cfg.output, "output file (stdout when absent)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol-group", cfg.tol_group, "frequency grouping tolerance");
    sub->add_option("--tol-integer", cfg.tol_integer, "integer proximity tolerance");
    sub->add_option("--samples", cfg.samples, "sample count");
    sub->add_option("--mode", cfg.mode, "float or exact")
        ->check(CLI::IsMember({"float", "exact"}));
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "spectral and genericity summary");
  add_common(analyze, true);

  CLI::App* locus = app.add_subcommand("locus", "conjugate values up to a horizon");
  add_common(locus, true);
  locus->add_option("--horizon", horizon, "largest t to report");

  CLI::App* jacobi = app.add_subcommand("jacobi-verify",
                                        "endpoint determinant and nullity on a t grid");
  add_common(jacobi, true);
  jacobi->add_option("--z", z_coords_raw, "central coordinates, comma separated")
      ->required();
  jacobi->add_option("--t-min", cfg.t_min, "grid start");
  jacobi->add_option("--t-max", cfg.t_max, "grid end");
  jacobi->add_option("--t-steps", cfg.t_steps, "grid size");

  CLI::App* genericity = app.add_subcommand("genericity", "membership certificate");
  add_common(genericity, true);

  CLI::App* sample = app.add_subcommand("sample", "generic fraction within one plane");
  add_common(sample, false);
  sample->add_option("-i,--input", cfg.inputs, "plane as an algebra file");
  sample->add_option("--p", cfg.p, "plane dimension");
  sample->add_option("--q", cfg.q, "matrix dimension");

  CLI::App* measure = app.add_subcommand("measure",
                                         "fraction of planes with a generic direction");
  add_common(measure, false);
  measure->add_option("--p", cfg.p, "plane dimension")->required();
  measure->add_option("--q", cfg.q, "matrix dimension")->required();
  measure->add_option("--dir-samples", cfg.dir_samples, "directions per plane");

  CLI::App* compare = app.add_subcommand("compare", "sampled weak-conjugacy comparison");
  compare->add_option("inputs", cfg.inputs,
                      "two algebra files and a p x p matrix file")
      ->expected(3);
  compare->add_option("-o,--output", cfg.output, "output file (stdout when absent)");
  compare->add_option("--seed", cfg.seed, "random seed");
  compare->add_option("--samples", cfg.samples, "sample count");

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : {analyze, locus, jacobi, genericity, sample, measure, compare})
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  if (locus->count("--horizon") > 0) cfg.horizon = horizon;
  if (!z_coords_raw.empty()) {
    try {
      cfg.z_coords = parse_coords(z_coords_raw);
    } catch (const nilgeo::InputError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 1;
    }
  }
  return nilgeo::cli::run(cfg);
}
