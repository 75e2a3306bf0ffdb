#pragma once

#include <complex>
#include <random>
#include <vector>

#include "nilgeo/genericity.hpp"
#include "nilgeo/matrix.hpp"
#include "nilgeo/spectral.hpp"

// Shared builders and independent oracles. The oracles deliberately avoid
// the library's computation paths: rank by plain row reduction, the
// discriminant by its root-product definition.
namespace testing_support {

inline nilgeo::Mat rotation_block(double lambda) {
  nilgeo::Mat j(2, 2);
  j(0, 1) = lambda;
  j(1, 0) = -lambda;
  return j;
}

// blockdiag(lambda_1 J, ..., lambda_k J, 0_zeros)
inline nilgeo::SkewMatrix block_skew(const std::vector<double>& lambdas, int zeros = 0) {
  int q = 2 * static_cast<int>(lambdas.size()) + zeros;
  nilgeo::Mat m(q, q);
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    m(2 * k, 2 * k + 1) = lambdas[k];
    m(2 * k + 1, 2 * k) = -lambdas[k];
  }
  return nilgeo::SkewMatrix(m);
}

inline nilgeo::SkewMatrix random_skew(int q, std::mt19937_64& g) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  nilgeo::Mat m(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      double x = gauss(g);
      m(i, j) = x;
      m(j, i) = -x;
    }
  return nilgeo::SkewMatrix(m);
}

// numerators in [-3, 3], denominators in [1, 4]
inline nilgeo::RationalSkewMatrix random_rational_skew(int q, std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<nilgeo::Rational> entries(static_cast<std::size_t>(q) * q,
                                        nilgeo::Rational(0));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      nilgeo::Rational r(num(g), den(g));
      r.canonicalize();
      entries[static_cast<std::size_t>(i) * q + j] = r;
      entries[static_cast<std::size_t>(j) * q + i] = -r;
    }
  return nilgeo::RationalSkewMatrix(q, std::move(entries));
}

// Row-echelon rank with partial pivoting; independent of the library's
// rank and singular value routines.
inline int rank_row_reduction(nilgeo::Mat a, double tol) {
  const int rows = a.rows(), cols = a.cols();
  int rank = 0;
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++lead) {
    int piv = -1;
    double best = tol;
    for (int i = r; i < rows; ++i)
      if (std::abs(a(i, lead)) > best) {
        best = std::abs(a(i, lead));
        piv = i;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      double f = a(i, lead) / a(r, lead);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
    ++rank;
  }
  return rank;
}

// prod_{i<j} (roots[i] - roots[j])^2 for a monic polynomial given by its
// roots; the definition of the discriminant, evaluated directly.
inline std::complex<double> disc_from_roots(const std::vector<std::complex<double>>& roots) {
  std::complex<double> prod(1.0, 0.0);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      std::complex<double> d = roots[i] - roots[j];
      prod *= d * d;
    }
  return prod;
}

// two-sample Kolmogorov-Smirnov statistic
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    double fa = static_cast<double>(i) / a.size();
    double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

}  // namespace testing_support
