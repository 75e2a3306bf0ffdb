#include "nilgeo/rational_poly.hpp"

#include <cctype>
#include <utility>

#include "nilgeo/errors.hpp"

namespace nilgeo {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw BadInput("rational_from_string: empty string");
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  bool digits = false, slash = false;
  for (; pos < s.size(); ++pos) {
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits = true;
    } else if (s[pos] == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      throw BadInput("rational_from_string: cannot parse '" + s + "'");
    }
  }
  if (!digits) throw BadInput("rational_from_string: cannot parse '" + s + "'");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw BadInput("rational_from_string: cannot parse '" + s + "'");
  if (slash && mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw BadInput("rational_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending)
    : c_(std::move(ascending)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

void RationalPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational RationalPolynomial::leading() const {
  if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return c_.back();
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return RationalPolynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::shifted_down(int k) const {
  if (k < 0) throw BadInput("shifted_down: negative shift");
  for (int i = 0; i < k; ++i)
    if (coeff(i) != 0)
      throw NotDivisible("shifted_down: coefficient of t^" + std::to_string(i) +
                         " is nonzero");
  if (static_cast<int>(c_.size()) <= k) return RationalPolynomial();
  std::vector<Rational> d(c_.begin() + k, c_.end());
  return RationalPolynomial(std::move(d));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return RationalPolynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(c));
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  return a.c_ == b.c_;
}

std::string RationalPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rational_to_string(c_[k]);
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

namespace {

// Fraction-free determinant. Entries must be integers; exact divisions by
// the previous pivot keep growth polynomial.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& a) {
  const int n = static_cast<int>(a.size());
  int sign = 1;
  mpz_class prev(1);
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return mpz_class(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

Rational resultant(const RationalPolynomial& f, const RationalPolynomial& g) {
  const int n = f.degree(), m = g.degree();
  if (n < 0 || m < 0) throw ZeroPolynomial("resultant of the zero polynomial");
  if (n == 0 && m == 0) return Rational(1);
  if (n == 0) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r *= f.coeff(0);
    return r;
  }
  if (m == 0) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= g.coeff(0);
    return r;
  }

  // Sylvester matrix: m shifted rows of f above n shifted rows of g.
  const int size = n + m;
  std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) syl[row][row + k] = f.coeff(n - k);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) syl[m + row][row + k] = g.coeff(m - k);

  // clear denominators per row, then integer Bareiss
  Rational scale(1);
  std::vector<std::vector<mpz_class>> zmat(size, std::vector<mpz_class>(size));
  for (int i = 0; i < size; ++i) {
    mpz_class l(1);
    for (int j = 0; j < size; ++j) {
      mpz_class den(mpq_denref(syl[i][j].get_mpq_t()));
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (int j = 0; j < size; ++j) {
      Rational v = syl[i][j] * Rational(l);
      v.canonicalize();
      zmat[i][j] = v.get_num();
    }
    scale *= Rational(l);
  }
  Rational det(bareiss_det(zmat));
  det /= scale;
  det.canonicalize();
  return det;
}

Rational discriminant(const RationalPolynomial& f) {
  const int n = f.degree();
  if (n < 1)
    throw ZeroPolynomial("discriminant requires degree >= 1, got degree " +
                         std::to_string(n));
  if (n == 1) return Rational(1);
  Rational res = resultant(f, f.derivative());
  Rational d = res / f.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) d = -d;
  d.canonicalize();
  return d;
}

}  // namespace nilgeo
