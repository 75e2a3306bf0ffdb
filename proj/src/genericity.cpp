#include "nilgeo/genericity.hpp"

#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"

namespace nilgeo {

RationalSkewMatrix::RationalSkewMatrix(int dim, std::vector<Rational> row_major)
    : dim_(dim), d_(std::move(row_major)) {
  if (dim_ < 2)
    throw DimensionMismatch("rational skew matrix dimension must be >= 2, got " +
                            std::to_string(dim_));
  if (d_.size() != static_cast<std::size_t>(dim_) * dim_)
    throw DimensionMismatch("rational skew matrix: expected " +
                            std::to_string(dim_ * dim_) + " entries, got " +
                            std::to_string(d_.size()));
  for (Rational& r : d_) r.canonicalize();
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      if (at(i, j) != -at(j, i))
        throw NotSkew("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") is not the negative of its transpose");
}

RationalSkewMatrix RationalSkewMatrix::scaled(long m) const {
  std::vector<Rational> d(d_);
  for (Rational& r : d) r *= m;
  return RationalSkewMatrix(dim_, std::move(d));
}

SkewMatrix RationalSkewMatrix::to_float() const {
  Mat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = at(i, j).get_d();
  return SkewMatrix(m);
}

RationalPolynomial char_poly_exact(const RationalSkewMatrix& z) {
  const int n = z.dim();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;

  // Faddeev-LeVerrier; the division by k is exact over Q
  std::vector<Rational> m(static_cast<std::size_t>(n) * n, Rational(0));
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  for (int i = 0; i < n; ++i) m[idx(i, i)] = 1;

  for (int k = 1; k <= n; ++k) {
    std::vector<Rational> prod(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (z.at(i, l) == 0) continue;
        for (int j = 0; j < n; ++j) prod[idx(i, j)] += z.at(i, l) * m[idx(l, j)];
      }
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += prod[idx(i, i)];
    c[n - k] = -tr / k;
    for (int i = 0; i < n; ++i) prod[idx(i, i)] += c[n - k];
    m = std::move(prod);
  }
  for (Rational& r : c) r.canonicalize();
  return RationalPolynomial(std::move(c));
}

RationalPolynomial psi_m(const RationalSkewMatrix& z, long m) {
  if (m == 0 || m == 1 || m == -1)
    throw BadInput("psi_m: |m| must be >= 2, got " + std::to_string(m));
  RationalPolynomial product = char_poly_exact(z) * char_poly_exact(z.scaled(m));
  if (z.dim() % 2 == 0) return product;
  // odd q: both factors vanish at zero, so t^2 divides exactly
  return product.shifted_down(2);
}

bool in_A_m_exact(const RationalSkewMatrix& z, long m) {
  if (discriminant(char_poly_exact(z)) == 0) return false;
  return discriminant(psi_m(z, m)) != 0;
}

namespace {

GenericityReport float_report(const SpectralData& spec, double tol) {
  GenericityReport rep;
  rep.exact = false;

  // distinct eigenvalues: every frequency simple and at most one zero
  rep.distinct = spec.kernel_dim <= 1;
  for (const Frequency& f : spec.frequencies)
    if (f.mult != 1) rep.distinct = false;

  if (spec.frequencies.size() >= 2) {
    double ratio_bound = spec.lambda_max() / spec.lambda_min();
    rep.m_max_tested = std::max(1, static_cast<int>(std::ceil(ratio_bound)));
    for (std::size_t a = 0; a < spec.frequencies.size(); ++a)
      for (std::size_t b = 0; b < spec.frequencies.size(); ++b) {
        if (a == b) continue;
        double la = spec.frequencies[a].lambda;
        double lb = spec.frequencies[b].lambda;
        if (la <= lb) continue;
        double ratio = la / lb;
        double k = std::round(ratio);
        if (k >= 2.0 && std::abs(ratio - k) < tol)
          rep.bad_ratios.push_back(BadRatio{la, lb, static_cast<int>(k)});
      }
  } else {
    rep.m_max_tested = 1;
  }
  return rep;
}

}  // namespace

GenericityReport in_O_membership(const SpectralData& spec, double tol) {
  return float_report(spec, tol);
}

GenericityReport in_O_membership(const SkewMatrix& z, double tol) {
  return float_report(spectral_decompose(z), tol);
}

GenericityReport in_O_membership(const RationalSkewMatrix& z, GenericityMode mode,
                                 double tol) {
  SpectralData spec = spectral_decompose(z.to_float());
  if (mode == GenericityMode::floating) return float_report(spec, tol);

  GenericityReport rep;
  rep.exact = true;
  rep.distinct = discriminant(char_poly_exact(z)) != 0;

  int m_max = 1;
  if (spec.frequencies.size() >= 2)
    m_max = std::max(1, static_cast<int>(std::ceil(spec.lambda_max() / spec.lambda_min())));
  rep.m_max_tested = m_max;

  for (int m = 2; m <= m_max; ++m) {
    bool ok = rep.distinct && discriminant(psi_m(z, m)) != 0 &&
              discriminant(psi_m(z, -m)) != 0;
    if (!ok) {
      // locate the closest float ratio for the report; the verdict itself
      // is exact
      BadRatio bad{0.0, 0.0, m};
      double best = -1.0;
      for (std::size_t a = 0; a < spec.frequencies.size(); ++a)
        for (std::size_t b = 0; b < spec.frequencies.size(); ++b) {
          if (a == b) continue;
          double la = spec.frequencies[a].lambda;
          double lb = spec.frequencies[b].lambda;
          if (la <= lb) continue;
          double d = std::abs(la / lb - m);
          if (best < 0.0 || d < best) {
            best = d;
            bad.lambda_a = la;
            bad.lambda_b = lb;
          }
        }
      if (rep.distinct) rep.bad_ratios.push_back(bad);
    }
  }
  return rep;
}

}  // namespace nilgeo
