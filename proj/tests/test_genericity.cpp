#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "nilgeo/algebra.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/genericity.hpp"
#include "nilgeo/rational_poly.hpp"

using namespace nilgeo;
using namespace testing_support;

namespace {

RationalPolynomial poly(std::vector<long> ascending) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

// q x q with rotation blocks of integer rates, zero-padded
RationalSkewMatrix rational_blocks(const std::vector<long>& rates, int zeros = 0) {
  int q = 2 * static_cast<int>(rates.size()) + zeros;
  std::vector<Rational> d(static_cast<std::size_t>(q) * q, Rational(0));
  for (std::size_t k = 0; k < rates.size(); ++k) {
    d[(2 * k) * q + (2 * k + 1)] = Rational(rates[k]);
    d[(2 * k + 1) * q + (2 * k)] = Rational(-rates[k]);
  }
  return RationalSkewMatrix(q, std::move(d));
}

}  // namespace

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(rational_from_string("3") == Rational(3));
  CHECK(rational_from_string("-2") == Rational(-2));
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-5/7") == Rational(-5, 7));
  CHECK(rational_from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(rational_from_string(""), BadInput);
  CHECK_THROWS_AS(rational_from_string("abc"), BadInput);
  CHECK_THROWS_AS(rational_from_string("1.5"), BadInput);
  CHECK_THROWS_AS(rational_from_string("1/0"), BadInput);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), BadInput);
  CHECK_THROWS_AS(rational_from_string("/3"), BadInput);
}

TEST_CASE("polynomial arithmetic over the rationals") {
  RationalPolynomial f = poly({1, 0, 1});   // t^2 + 1
  RationalPolynomial g = poly({4, 0, 1});   // t^2 + 4
  CHECK(f.degree() == 2);
  CHECK((f * g) == poly({4, 0, 5, 0, 1}));
  CHECK((f + g) == poly({5, 0, 2}));
  CHECK((f - f).is_zero());
  CHECK((f - f).degree() == -1);
  CHECK(f.derivative() == poly({0, 2}));
  CHECK(poly({5}).derivative().is_zero());
  // trailing zeros strip on construction
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("exact division by powers of t") {
  RationalPolynomial f = poly({0, 0, 4, 0, 1});  // t^2 (t^2 + 4)
  CHECK(f.shifted_down(2) == poly({4, 0, 1}));
  CHECK(f.shifted_down(0) == f);
  CHECK_THROWS_AS(f.shifted_down(3), NotDivisible);
  CHECK_THROWS_AS(poly({1, 1}).shifted_down(1), NotDivisible);
}

TEST_CASE("resultants of small polynomials") {
  // Res(t^2 + 1, 2t) = 4: the derivative evaluates to +-2i at the roots
  CHECK(resultant(poly({1, 0, 1}), poly({0, 2})) == Rational(4));
  // Res against a constant is that constant to the degree
  CHECK(resultant(poly({1, 0, 1}), poly({3})) == Rational(9));
  CHECK(resultant(poly({3}), poly({1, 0, 1})) == Rational(9));
  // fractional coefficients: Res(t^2 + 1/4, t - 1/2) = 1/4 + 1/4
  RationalPolynomial quarter({Rational(1, 4), Rational(0), Rational(1)});
  RationalPolynomial linear({Rational(-1, 2), Rational(1)});
  CHECK(resultant(quarter, linear) == Rational(1, 2));
  CHECK_THROWS_AS(resultant(RationalPolynomial(), poly({1, 1})), ZeroPolynomial);
}

TEST_CASE("resultant vanishes exactly on a shared root") {
  // both vanish at t = 2
  CHECK(resultant(poly({-2, 1}), poly({-4, 0, 1})) == Rational(0));
  CHECK(resultant(poly({-6, 5, -1}), poly({-2, 1})) == Rational(0));
}

TEST_CASE("discriminants match the root-product definition") {
  // disc(t^2 + 1): roots +-i, (2i)^2 = -4
  CHECK(discriminant(poly({1, 0, 1})) == Rational(-4));
  std::complex<double> oracle2 = disc_from_roots({{0.0, 1.0}, {0.0, -1.0}});
  CHECK(oracle2.real() == doctest::Approx(-4.0));
  CHECK(oracle2.imag() == doctest::Approx(0.0));

  // disc((t^2 + 1)(t^2 + 4)) over the four roots {i, -i, 2i, -2i}
  Rational d = discriminant(poly({4, 0, 5, 0, 1}));
  std::complex<double> oracle4 =
      disc_from_roots({{0.0, 1.0}, {0.0, -1.0}, {0.0, 2.0}, {0.0, -2.0}});
  CHECK(oracle4.imag() == doctest::Approx(0.0));
  CHECK(d.get_d() == doctest::Approx(oracle4.real()).epsilon(1e-12));
  CHECK(d == Rational(5184));

  // disc(t^2 - 3t + 2) with roots 1, 2: (1 - 2)^2 = 1
  CHECK(discriminant(poly({2, -3, 1})) == Rational(1));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  CHECK(discriminant(poly({1, -2, 1})) == Rational(0));   // (t - 1)^2
  CHECK(discriminant(poly({0, 0, 1})) == Rational(0));    // t^2
  RationalPolynomial f = poly({1, 0, 1});
  CHECK(discriminant(f * f) == Rational(0));              // (t^2 + 1)^2
  CHECK(discriminant(poly({0, 1})) == Rational(1));       // degree 1 convention
  CHECK_THROWS_AS(discriminant(poly({7})), ZeroPolynomial);
  CHECK_THROWS_AS(discriminant(RationalPolynomial()), ZeroPolynomial);
}

TEST_CASE("random quartics: exact discriminant against the complex-root oracle") {
  // monic (t - a)(t - b)(t - c)(t - d) with small integer roots
  std::mt19937_64 g(101);
  for (int trial = 0; trial < 20; ++trial) {
    long roots[4];
    for (long& r : roots) r = static_cast<long>(g() % 7) - 3;
    RationalPolynomial f = poly({1});
    for (long r : roots) f = f * poly({-r, 1});
    Rational d = discriminant(f);
    std::complex<double> oracle = disc_from_roots(
        {{double(roots[0]), 0.0}, {double(roots[1]), 0.0}, {double(roots[2]), 0.0},
         {double(roots[3]), 0.0}});
    CHECK(d.get_d() == doctest::Approx(oracle.real()).epsilon(1e-9));
  }
}

TEST_CASE("rational skew matrices enforce exact skewness") {
  std::vector<Rational> bad{Rational(0), Rational(1), Rational(1), Rational(0)};
  CHECK_THROWS_AS(RationalSkewMatrix(2, std::move(bad)), NotSkew);
  std::vector<Rational> diag{Rational(1), Rational(0), Rational(0), Rational(-1)};
  CHECK_THROWS_AS(RationalSkewMatrix(2, std::move(diag)), NotSkew);
  CHECK_THROWS_AS(RationalSkewMatrix(2, std::vector<Rational>(3, Rational(0))),
                  DimensionMismatch);
  RationalSkewMatrix j = rational_blocks({1});
  CHECK(j.at(0, 1) == Rational(1));
  CHECK(j.scaled(3).at(1, 0) == Rational(-3));
  CHECK(j.to_float()(0, 1) == 1.0);
}

TEST_CASE("exact characteristic polynomials of rotation blocks") {
  CHECK(char_poly_exact(rational_blocks({1})) == poly({1, 0, 1}));
  CHECK(char_poly_exact(rational_blocks({1, 2})) == poly({4, 0, 5, 0, 1}));
  CHECK(char_poly_exact(rational_blocks({1}, 1)) == poly({0, 1, 0, 1}));
}

TEST_CASE("exact characteristic polynomials have the parity forced by skewness") {
  std::mt19937_64 g(103);
  for (int trial = 0; trial < 25; ++trial) {
    int q = 2 + trial % 5;
    RationalSkewMatrix z = random_rational_skew(q, g);
    RationalPolynomial c = char_poly_exact(z);
    CHECK(c.degree() == q);
    CHECK(c.leading() == Rational(1));
    // det(tI - Z) = (-1)^q det(-tI - Z) for skew Z, so only every other
    // coefficient survives
    for (int k = q - 1; k >= 0; k -= 2) CHECK(c.coeff(k) == Rational(0));

    // cross-check against the floating recurrence
    Vec approx = nilgeo::char_poly(z.to_float().entries());
    for (int k = 0; k <= q; ++k)
      CHECK(c.coeff(k).get_d() == doctest::Approx(approx[k]).epsilon(1e-9));
  }
}

TEST_CASE("the ratio polynomial multiplies the spectra of Z and mZ") {
  CHECK(psi_m(rational_blocks({1}), 2) == poly({4, 0, 5, 0, 1}));
  // odd dimension: the double root at zero is divided out
  CHECK(psi_m(rational_blocks({1}, 1), 2) == poly({4, 0, 5, 0, 1}));
  // the zero matrix keeps its full power of t in even dimension
  RationalSkewMatrix zero(2, std::vector<Rational>(4, Rational(0)));
  CHECK(psi_m(zero, 2) == poly({0, 0, 0, 0, 1}));
  CHECK_THROWS_AS(psi_m(rational_blocks({1}), 0), BadInput);
  CHECK_THROWS_AS(psi_m(rational_blocks({1}), 1), BadInput);
  CHECK_THROWS_AS(psi_m(rational_blocks({1}), -1), BadInput);
}

TEST_CASE("the ratio polynomial has the expected degree") {
  std::mt19937_64 g(107);
  for (int q : {2, 3, 4, 5}) {
    RationalSkewMatrix z = random_rational_skew(q, g);
    RationalPolynomial p = psi_m(z, 2);
    CHECK(p.degree() == (q % 2 == 0 ? 2 * q : 2 * q - 2));
  }
}

TEST_CASE("eigenvalue ratio certificates for integer rotation rates") {
  RationalSkewMatrix z12 = rational_blocks({1, 2});
  CHECK_FALSE(in_A_m_exact(z12, 2));  // ratio 2/1 is exactly 2
  CHECK(in_A_m_exact(z12, 3));
  CHECK(in_A_m_exact(z12, -3));

  RationalSkewMatrix z13 = rational_blocks({1, 3});
  CHECK(in_A_m_exact(z13, 2));
  CHECK_FALSE(in_A_m_exact(z13, 3));

  // a single block has no ratios to violate
  CHECK(in_A_m_exact(rational_blocks({1}), 2));
  CHECK(in_A_m_exact(rational_blocks({1}), 5));

  // repeated eigenvalues fail every certificate
  CHECK_FALSE(in_A_m_exact(rational_blocks({1, 1}), 2));
  RationalSkewMatrix zero(2, std::vector<Rational>(4, Rational(0)));
  CHECK_FALSE(in_A_m_exact(zero, 2));
}

TEST_CASE("float genericity verdicts on block spectra") {
  GenericityReport good = in_O_membership(block_skew({1.0, std::sqrt(2.0)}));
  CHECK(good.distinct);
  CHECK(good.bad_ratios.empty());
  CHECK(good.member());
  CHECK_FALSE(good.exact);

  GenericityReport ratio = in_O_membership(block_skew({1.0, 2.0}));
  CHECK(ratio.distinct);
  REQUIRE(ratio.bad_ratios.size() == 1);
  CHECK(ratio.bad_ratios[0].lambda_a == doctest::Approx(2.0));
  CHECK(ratio.bad_ratios[0].lambda_b == doctest::Approx(1.0));
  CHECK(ratio.bad_ratios[0].m == 2);
  CHECK(ratio.m_max_tested == 2);
  CHECK_FALSE(ratio.member());

  GenericityReport repeated = in_O_membership(block_skew({1.0, 1.0}));
  CHECK_FALSE(repeated.distinct);
  CHECK_FALSE(repeated.member());

  // two zero eigenvalues already break distinctness
  GenericityReport kernel2 = in_O_membership(block_skew({1.0}, 2));
  CHECK_FALSE(kernel2.distinct);
  GenericityReport kernel1 = in_O_membership(block_skew({1.0}, 1));
  CHECK(kernel1.distinct);
  CHECK(kernel1.member());
}

TEST_CASE("exact genericity verdicts certify every integer ratio up to the bound") {
  GenericityReport r12 = in_O_membership(rational_blocks({1, 2}), GenericityMode::exact);
  CHECK(r12.exact);
  CHECK(r12.distinct);
  CHECK(r12.m_max_tested == 2);
  REQUIRE(r12.bad_ratios.size() == 1);
  CHECK(r12.bad_ratios[0].m == 2);
  CHECK(r12.bad_ratios[0].lambda_a == doctest::Approx(2.0));
  CHECK_FALSE(r12.member());

  GenericityReport r13 = in_O_membership(rational_blocks({1, 3}), GenericityMode::exact);
  CHECK(r13.m_max_tested == 3);
  REQUIRE(r13.bad_ratios.size() == 1);
  CHECK(r13.bad_ratios[0].m == 3);

  GenericityReport r25 = in_O_membership(rational_blocks({2, 5}), GenericityMode::exact);
  CHECK(r25.distinct);
  CHECK(r25.bad_ratios.empty());
  CHECK(r25.member());
  CHECK(r25.m_max_tested == 3);

  GenericityReport rep = in_O_membership(rational_blocks({1, 1}), GenericityMode::exact);
  CHECK_FALSE(rep.distinct);
  CHECK_FALSE(rep.member());

  // floating mode on the same input returns the float report
  GenericityReport fl = in_O_membership(rational_blocks({1, 2}), GenericityMode::floating);
  CHECK_FALSE(fl.exact);
  CHECK_FALSE(fl.member());
}

TEST_CASE("exact and float verdicts agree away from the tolerance bands") {
  std::mt19937_64 g(109);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int q = 2 + trial % 4;
    RationalSkewMatrix z = random_rational_skew(q, g);
    SpectralData spec = spectral_decompose(z.to_float());

    // skip draws where a float quantity sits inside a decision band
    bool decisive = true;
    std::vector<double> lambdas;
    for (const Frequency& f : spec.frequencies) {
      if (f.mult != 1) decisive = false;
      lambdas.push_back(f.lambda);
    }
    for (std::size_t a = 0; a < lambdas.size() && decisive; ++a)
      for (std::size_t b = 0; b < lambdas.size(); ++b) {
        if (a == b) continue;
        if (lambdas[a] <= lambdas[b]) continue;
        double ratio = lambdas[a] / lambdas[b];
        double d = std::abs(ratio - std::round(ratio));
        if (std::round(ratio) >= 2.0 && d > 0.1 * defaults::integer_tol &&
            d < 10.0 * defaults::integer_tol)
          decisive = false;
      }
    for (std::size_t a = 1; a < lambdas.size() && decisive; ++a)
      if (lambdas[a] - lambdas[a - 1] < 1e-4) decisive = false;
    // kernel classification must be unambiguous: only the parity-forced
    // zero eigenvalue, and the smallest frequency well above the threshold
    if (spec.kernel_dim != q % 2) decisive = false;
    if (spec.M > 0 && spec.lambda_min() < 1e-4) decisive = false;
    if (!decisive) continue;

    GenericityReport ex = in_O_membership(z, GenericityMode::exact);
    GenericityReport fl = in_O_membership(spec);
    CHECK(ex.member() == fl.member());
    CHECK(ex.distinct == fl.distinct);
    ++compared;
  }
  CHECK(compared > 30);
}
