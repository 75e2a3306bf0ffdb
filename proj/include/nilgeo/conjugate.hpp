#pragma once

#include <optional>
#include <vector>

#include "nilgeo/defaults.hpp"
#include "nilgeo/spectral.hpp"

namespace nilgeo {

// Along the central geodesic with initial velocity Z/|Z|, conjugate points
// occur exactly at t = 2 pi k / lambda for the positive frequencies lambda
// of Z and integers k >= 1, each contributing twice its multiplicity.

// One frequency responsible for a conjugate value: t = 2 pi k / lambda.
struct Contributor {
  double lambda = 0.0;
  int mult = 0;
  int k = 0;
};

struct ConjugateValue {
  double t = 0.0;
  int mult = 0;  // 2 * sum of contributor multiplicities, always even
  std::vector<Contributor> contributors;
};

struct PrimitiveValue {
  double t = 0.0;
  double lambda = 0.0;
};

// Frequencies lambda with lambda * t / (2 pi) within tol of a positive
// integer k, with that k.
std::vector<Contributor> c_set(const SpectralData& spec, double t,
                               double tol = defaults::integer_tol);

// All conjugate values in (0, horizon], ascending, values within merge_tol
// (relative) collapsed into one.
std::vector<ConjugateValue> conjugate_values(const SpectralData& spec, double horizon,
                                             double tol = defaults::integer_tol);

// Conjugate values that are not an integer multiple >= 2 of a smaller one:
// t = 2 pi / lambda for frequencies lambda such that no frequency equals
// k * lambda, k >= 2, within tol. Ascending in t.
std::vector<PrimitiveValue> primitive_values(const SpectralData& spec,
                                             double tol = defaults::integer_tol);

// The primitive count attains its bound floor(q/2) iff all frequencies are
// simple, there are floor(q/2) of them, and no ratio of two frequencies is
// an integer >= 2. Computed both ways and cross-checked.
bool is_maximally_primitive(const SpectralData& spec, int q,
                            double tol = defaults::integer_tol);

// Inverse of the primitive map: lambda_k = 2 pi / t_k. Requires exactly
// floor(q/2) distinct values; throws WrongCount otherwise. Ascending.
std::vector<double> spectrum_from_primitives(const std::vector<double>& ts, int q);

// 3 full periods of the slowest frequency.
double default_horizon(const SpectralData& spec);

struct ConjugateLocusReport {
  double horizon = 0.0;
  std::vector<ConjugateValue> values;
  std::vector<PrimitiveValue> primitives;
  int P = 0;  // floor(q/2)
  bool maximal = false;
};

ConjugateLocusReport conjugate_locus(const SpectralData& spec,
                                     std::optional<double> horizon = std::nullopt,
                                     double tol = defaults::integer_tol);

}  // namespace nilgeo
