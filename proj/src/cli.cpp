#include "nilgeo/cli.hpp"

#include <iostream>
#include <sstream>

#include "nilgeo/conjugate.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/genericity.hpp"
#include "nilgeo/grassmann.hpp"
#include "nilgeo/io.hpp"
#include "nilgeo/jacobi_fields.hpp"
#include "nilgeo/rng.hpp"

namespace nilgeo::cli {

namespace {

using io::json;

json config_block(const RunConfig& cfg) {
  json c{{"subcommand", cfg.subcommand},
         {"inputs", cfg.inputs},
         {"seed", cfg.seed},
         {"tol_group", cfg.tol_group},
         {"tol_integer", cfg.tol_integer},
         {"samples", cfg.samples},
         {"mode", cfg.mode},
         {"format", cfg.format}};
  if (cfg.horizon)
    c["horizon"] = *cfg.horizon;
  else
    c["horizon"] = nullptr;
  if (cfg.subcommand == "measure") c["dir_samples"] = cfg.dir_samples;
  if (cfg.subcommand == "sample" || cfg.subcommand == "measure") {
    c["p"] = cfg.p;
    c["q"] = cfg.q;
  }
  if (cfg.subcommand == "jacobi-verify") {
    c["z_coords"] = cfg.z_coords;
    c["t_min"] = cfg.t_min;
    c["t_max"] = cfg.t_max;
    c["t_steps"] = cfg.t_steps;
  }
  return c;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty())
    std::cout << text;
  else
    io::write_text_file(cfg.output, text);
}

void emit_json(const RunConfig& cfg, json report) {
  report["config"] = config_block(cfg);
  emit(cfg, report.dump(2) + "\n");
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1)
    throw BadInput(cfg.subcommand + " expects exactly one input file, got " +
                   std::to_string(cfg.inputs.size()));
  return cfg.inputs.front();
}

void run_analyze(const RunConfig& cfg) {
  json in = io::load_json_file(single_input(cfg));
  json report;
  SpectralData spec;
  if (cfg.mode == "exact") {
    RationalSkewMatrix z = io::rational_skew_from_json(in);
    spec = spectral_decompose(z.to_float());
    report["genericity"] =
        io::genericity_to_json(in_O_membership(z, GenericityMode::exact, cfg.tol_integer));
    report["ricci"] = ricci_central(z.to_float());
    report["norm"] = z.to_float().norm();
  } else {
    SkewMatrix z = io::skew_from_json(in);
    spec = spectral_decompose(z);
    report["genericity"] = io::genericity_to_json(in_O_membership(spec, cfg.tol_integer));
    report["ricci"] = ricci_central(z);
    report["norm"] = z.norm();
  }
  report["q"] = spec.dim;
  report["kernel_dim"] = spec.kernel_dim;
  report["M"] = spec.M;
  json freqs = json::array();
  for (const Frequency& f : spec.frequencies)
    freqs.push_back(json::array({f.lambda, f.mult}));
  report["frequencies"] = freqs;
  report["no_conjugate_points"] = (spec.M == 0);
  emit_json(cfg, report);
}

void run_locus(const RunConfig& cfg) {
  SkewMatrix z = io::skew_from_json(io::load_json_file(single_input(cfg)));
  SpectralData spec = spectral_decompose(z);
  ConjugateLocusReport rep = conjugate_locus(spec, cfg.horizon, cfg.tol_integer);
  if (cfg.format == "csv") {
    emit(cfg, io::locus_to_csv(rep));
  } else {
    emit_json(cfg, io::locus_to_json(rep));
  }
}

void run_jacobi_verify(const RunConfig& cfg) {
  StandardAlgebra alg = io::algebra_from_json(io::load_json_file(single_input(cfg)));
  if (cfg.z_coords.empty())
    throw BadInput("jacobi-verify: no central coordinates given (--z)");
  if (cfg.t_steps < 1) throw BadInput("jacobi-verify: t_steps must be >= 1");
  if (!(cfg.t_min > 0.0) || cfg.t_max < cfg.t_min)
    throw BadInput("jacobi-verify: need 0 < t_min <= t_max");
  CentralElement z = central_element(alg, cfg.z_coords);
  FrameBasis frame = frame_from_algebra(alg, z);

  std::ostringstream out;
  out << "t,det,nullity\n";
  for (int i = 0; i < cfg.t_steps; ++i) {
    double t = cfg.t_steps == 1
                   ? cfg.t_min
                   : cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.t_steps - 1);
    EndpointResult res = endpoint_matrix(frame, t);
    out << io::format_double(t) << "," << io::format_double(determinant(res.matrix))
        << "," << res.nullity << "\n";
  }
  emit(cfg, out.str());
}

void run_genericity(const RunConfig& cfg) {
  json in = io::load_json_file(single_input(cfg));
  GenericityReport rep;
  if (cfg.mode == "exact") {
    rep = in_O_membership(io::rational_skew_from_json(in), GenericityMode::exact,
                          cfg.tol_integer);
  } else {
    rep = in_O_membership(io::skew_from_json(in), cfg.tol_integer);
  }
  emit_json(cfg, io::genericity_to_json(rep));
}

void run_sample(const RunConfig& cfg) {
  SubspaceW w;
  if (!cfg.inputs.empty()) {
    StandardAlgebra alg = io::algebra_from_json(io::load_json_file(single_input(cfg)));
    w = alg.W;
  } else {
    if (cfg.p < 1 || cfg.q < 2)
      throw BadInput("sample: need --p and --q (or an input plane)");
    w = sample_plane(SamplerConfig{cfg.seed, cfg.p, cfg.q, 1}, 0);
  }
  std::vector<char> verdicts;
  // direction draws live in a stream family separate from the plane draw
  double fraction = estimate_O_fraction_in_plane(w, cfg.samples, rng::mix(cfg.seed, 1),
                                                 cfg.tol_integer, &verdicts);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "draw,member\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i)
      out << i << "," << int(verdicts[i]) << "\n";
    emit(cfg, out.str());
    return;
  }
  json report{{"fraction", fraction},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"p", w.p},
              {"q", w.q}};
  emit_json(cfg, report);
}

void run_measure(const RunConfig& cfg) {
  if (cfg.p < 1 || cfg.q < 2) throw BadInput("measure: need --p and --q");
  std::vector<char> verdicts;
  double fraction = estimate_U_fraction(cfg.p, cfg.q, cfg.samples, cfg.dir_samples,
                                        cfg.seed, cfg.tol_integer, &verdicts);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "plane,hit\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i)
      out << i << "," << int(verdicts[i]) << "\n";
    emit(cfg, out.str());
    return;
  }
  json report{{"fraction", fraction},
              {"plane_samples", cfg.samples},
              {"dir_samples", cfg.dir_samples},
              {"seed", cfg.seed},
              {"p", cfg.p},
              {"q", cfg.q}};
  emit_json(cfg, report);
}

void run_compare(const RunConfig& cfg) {
  if (cfg.inputs.size() != 3)
    throw BadInput("compare expects two algebra files and one matrix file, got " +
                   std::to_string(cfg.inputs.size()) + " inputs");
  StandardAlgebra a1 = io::algebra_from_json(io::load_json_file(cfg.inputs[0]));
  StandardAlgebra a2 = io::algebra_from_json(io::load_json_file(cfg.inputs[1]));
  Mat phi = io::dense_from_json(io::load_json_file(cfg.inputs[2]), "phi");
  WeakConjugacyVerdict v =
      weak_conjugacy_compare(a1.W, a2.W, phi, cfg.samples, cfg.seed);
  json report{{"consistent", v.consistent}, {"samples", cfg.samples}};
  if (!v.consistent) {
    report["witness"] = json{{"coords", v.witness_coords},
                             {"max_coeff_dev", v.max_coeff_dev},
                             {"char_poly_1", v.char_poly_1},
                             {"char_poly_2", v.char_poly_2}};
  } else {
    report["witness"] = nullptr;
    report["max_coeff_dev"] = v.max_coeff_dev;
  }
  emit_json(cfg, report);
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    if (cfg.subcommand == "analyze") {
      run_analyze(cfg);
    } else if (cfg.subcommand == "locus") {
      run_locus(cfg);
    } else if (cfg.subcommand == "jacobi-verify") {
      run_jacobi_verify(cfg);
    } else if (cfg.subcommand == "genericity") {
      run_genericity(cfg);
    } else if (cfg.subcommand == "sample") {
      run_sample(cfg);
    } else if (cfg.subcommand == "measure") {
      run_measure(cfg);
    } else if (cfg.subcommand == "compare") {
      run_compare(cfg);
    } else {
      throw BadInput("unknown subcommand '" + cfg.subcommand + "'");
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace nilgeo::cli
