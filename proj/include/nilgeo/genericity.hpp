#pragma once

#include <vector>

#include "nilgeo/defaults.hpp"
#include "nilgeo/rational_poly.hpp"
#include "nilgeo/spectral.hpp"

namespace nilgeo {

// Exactly skew-symmetric matrix over Q. The genericity certificates are
// decided in exact arithmetic on this type; no floating value enters the
// verdict on that path.
class RationalSkewMatrix {
 public:
  RationalSkewMatrix(int dim, std::vector<Rational> row_major);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * dim_ + j];
  }

  RationalSkewMatrix scaled(long m) const;
  SkewMatrix to_float() const;

 private:
  int dim_;
  std::vector<Rational> d_;
};

// det(tI - Z), monic of degree q, by Faddeev-LeVerrier over Q.
RationalPolynomial char_poly_exact(const RationalSkewMatrix& z);

// det(tI - Z) det(tI - mZ); for odd q the forced double root at zero is
// divided out exactly, leaving degree 2q - 2. |m| >= 2.
RationalPolynomial psi_m(const RationalSkewMatrix& z, long m);

// True iff the eigenvalues of Z are distinct and no ratio of two distinct
// nonzero eigenvalues equals m. Decided by disc(char poly) != 0 and
// disc(psi_m) != 0.
bool in_A_m_exact(const RationalSkewMatrix& z, long m);

struct BadRatio {
  double lambda_a = 0.0;  // larger frequency
  double lambda_b = 0.0;
  int m = 0;  // lambda_a is within tolerance of m * lambda_b
};

struct GenericityReport {
  bool distinct = false;
  std::vector<BadRatio> bad_ratios;
  // ratios can only be integers up to ceil(lambda_max / lambda_min)
  int m_max_tested = 1;
  bool exact = false;

  bool member() const { return distinct && bad_ratios.empty(); }
};

enum class GenericityMode { exact, floating };

// Float path: verdict from a spectral decomposition.
GenericityReport in_O_membership(const SpectralData& spec,
                                 double tol = defaults::integer_tol);
GenericityReport in_O_membership(const SkewMatrix& z,
                                 double tol = defaults::integer_tol);

// Exact path certifies each m in [2, m_max] through in_A_m_exact for both
// signs; the float path only bounds m_max and labels the ratios reported.
GenericityReport in_O_membership(const RationalSkewMatrix& z, GenericityMode mode,
                                 double tol = defaults::integer_tol);

}  // namespace nilgeo
