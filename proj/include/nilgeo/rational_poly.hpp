#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilgeo {

// Arbitrary-precision rationals; mpq_class keeps sign and gcd normalized
// after every operation, which is exactly the contract the exact path needs.
using Rational = mpq_class;

// Accepts "3", "-2", "3/4", "-5/7". Throws BadInput on anything else.
Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

// Univariate polynomial over Q, coefficients ascending. The zero
// polynomial has degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);
  static RationalPolynomial constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // zero beyond the degree
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  RationalPolynomial derivative() const;
  // exact division by t^k; throws NotDivisible when a low coefficient is nonzero
  RationalPolynomial shifted_down(int k) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// det of the Sylvester matrix of f and g, by fraction-free Bareiss
// elimination over the integers after clearing denominators row by row.
Rational resultant(const RationalPolynomial& f, const RationalPolynomial& g);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff f has a repeated
// root. Degree must be >= 1; degree 1 gives 1 by convention.
Rational discriminant(const RationalPolynomial& f);

}  // namespace nilgeo
