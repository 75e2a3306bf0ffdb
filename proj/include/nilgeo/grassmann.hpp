#pragma once

#include <cstdint>
#include <vector>

#include "nilgeo/algebra.hpp"
#include "nilgeo/defaults.hpp"

namespace nilgeo {

// Monte Carlo sampling of p-planes in so(q) uniformly under the
// conjugation-invariant measure: iid Gaussian strict-upper-triangle
// coordinates followed by trace-form Gram-Schmidt. Streams are addressed
// as (seed, draw_index), see rng.hpp for the splitting rule.

struct SamplerConfig {
  std::uint64_t seed = 0;
  int p = 0;
  int q = 0;
  int samples = 0;
};

SubspaceW sample_plane(const SamplerConfig& cfg, std::uint64_t draw_index);

// Haar-distributed orthogonal matrix: Gaussian entries, then modified
// Gram-Schmidt on the columns. The R diagonal this produces is positive,
// which is what makes the distribution exactly Haar.
Mat random_orthogonal(int q, std::uint64_t seed, std::uint64_t draw_index);

// Fraction of unit directions Z in W that are spectrally generic (float
// path: distinct eigenvalues, no integer frequency ratio). Optionally
// records the per-sample verdicts.
double estimate_O_fraction_in_plane(const SubspaceW& w, int samples, std::uint64_t seed,
                                    double tol = defaults::integer_tol,
                                    std::vector<char>* verdicts = nullptr);

// Fraction of sampled p-planes containing at least one generic direction
// among dir_samples sampled directions.
double estimate_U_fraction(int p, int q, int plane_samples, int dir_samples,
                           std::uint64_t seed, double tol = defaults::integer_tol,
                           std::vector<char>* verdicts = nullptr);

}  // namespace nilgeo
