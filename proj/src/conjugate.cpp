#include "nilgeo/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"

namespace nilgeo {

namespace {
constexpr double two_pi = 6.283185307179586476925287;
}

std::vector<Contributor> c_set(const SpectralData& spec, double t, double tol) {
  if (t <= 0.0) throw BadInput("c_set: t must be positive");
  std::vector<Contributor> out;
  for (const Frequency& f : spec.frequencies) {
    double x = f.lambda * t / two_pi;
    double k = std::round(x);
    if (k >= 1.0 && std::abs(x - k) < tol)
      out.push_back(Contributor{f.lambda, f.mult, static_cast<int>(k)});
  }
  return out;
}

std::vector<ConjugateValue> conjugate_values(const SpectralData& spec, double horizon,
                                             double tol) {
  if (horizon <= 0.0) throw BadInput("conjugate_values: horizon must be positive");
  struct Hit {
    double t;
    Contributor c;
  };
  std::vector<Hit> hits;
  for (const Frequency& f : spec.frequencies) {
    // the boundary is soft by the same integer-proximity tolerance
    int k_max = static_cast<int>(std::floor(f.lambda * horizon / two_pi + tol));
    for (int k = 1; k <= k_max; ++k)
      hits.push_back(Hit{two_pi * k / f.lambda, Contributor{f.lambda, f.mult, k}});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.c.lambda < b.c.lambda;
  });

  std::vector<ConjugateValue> out;
  for (const Hit& h : hits) {
    if (!out.empty() &&
        h.t - out.back().t < defaults::merge_tol * std::max(h.t, out.back().t)) {
      out.back().contributors.push_back(h.c);
    } else {
      ConjugateValue v;
      v.t = h.t;
      v.contributors.push_back(h.c);
      out.push_back(v);
    }
  }
  for (ConjugateValue& v : out) {
    int sum = 0;
    for (const Contributor& c : v.contributors) sum += c.mult;
    v.mult = 2 * sum;
  }
  return out;
}

std::vector<PrimitiveValue> primitive_values(const SpectralData& spec, double tol) {
  std::vector<PrimitiveValue> out;
  for (const Frequency& f : spec.frequencies) {
    bool has_multiple = false;
    for (const Frequency& g : spec.frequencies) {
      if (&g == &f) continue;
      double ratio = g.lambda / f.lambda;
      double k = std::round(ratio);
      if (k >= 2.0 && std::abs(ratio - k) < tol) {
        has_multiple = true;
        break;
      }
    }
    if (!has_multiple) out.push_back(PrimitiveValue{two_pi / f.lambda, f.lambda});
  }
  std::sort(out.begin(), out.end(),
            [](const PrimitiveValue& a, const PrimitiveValue& b) { return a.t < b.t; });
  return out;
}

bool is_maximally_primitive(const SpectralData& spec, int q, double tol) {
  const int cap = q / 2;
  bool by_count = static_cast<int>(primitive_values(spec, tol).size()) == cap;

  bool by_spectrum = static_cast<int>(spec.frequencies.size()) == cap;
  if (by_spectrum)
    for (const Frequency& f : spec.frequencies)
      if (f.mult != 1) by_spectrum = false;
  if (by_spectrum) {
    for (std::size_t a = 0; a < spec.frequencies.size() && by_spectrum; ++a)
      for (std::size_t b = 0; b < spec.frequencies.size() && by_spectrum; ++b) {
        if (a == b) continue;
        double ratio = spec.frequencies[a].lambda / spec.frequencies[b].lambda;
        double k = std::round(ratio);
        if (k >= 2.0 && std::abs(ratio - k) < tol) by_spectrum = false;
      }
  }

  if (by_count != by_spectrum)
    throw NumericalError("is_maximally_primitive: primitive count and spectrum "
                         "criteria disagree");
  return by_count;
}

std::vector<double> spectrum_from_primitives(const std::vector<double>& ts, int q) {
  const int cap = q / 2;
  if (static_cast<int>(ts.size()) != cap)
    throw WrongCount("spectrum_from_primitives: got " + std::to_string(ts.size()) +
                     " primitive values, expected " + std::to_string(cap) + " for q = " +
                     std::to_string(q));
  for (double t : ts)
    if (t <= 0.0) throw BadInput("spectrum_from_primitives: t must be positive");
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = a + 1; b < ts.size(); ++b)
      if (std::abs(ts[a] - ts[b]) <= 1e-12 * std::max(ts[a], ts[b]))
        throw WrongCount("spectrum_from_primitives: primitive values " +
                         std::to_string(a) + " and " + std::to_string(b) +
                         " coincide");
  std::vector<double> lambdas;
  lambdas.reserve(ts.size());
  for (double t : ts) lambdas.push_back(two_pi / t);
  std::sort(lambdas.begin(), lambdas.end());
  return lambdas;
}

double default_horizon(const SpectralData& spec) {
  return 3.0 * two_pi / spec.lambda_min();
}

ConjugateLocusReport conjugate_locus(const SpectralData& spec,
                                     std::optional<double> horizon, double tol) {
  ConjugateLocusReport rep;
  rep.P = spec.dim / 2;
  // M = 0 means no conjugate points; the default horizon is undefined then
  rep.horizon = horizon.value_or(spec.M > 0 ? default_horizon(spec) : 0.0);
  if (rep.horizon > 0.0) rep.values = conjugate_values(spec, rep.horizon, tol);
  rep.primitives = primitive_values(spec, tol);
  rep.maximal = is_maximally_primitive(spec, spec.dim, tol);
  return rep;
}

}  // namespace nilgeo
