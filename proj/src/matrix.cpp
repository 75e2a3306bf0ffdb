#include "nilgeo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "nilgeo/errors.hpp"

namespace nilgeo {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

void axpy(double a, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

Vec scaled(const Vec& v, double a) {
  Vec r(v);
  for (double& x : r) x *= a;
  return r;
}

Mat::Mat(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, fill) {}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Mat::frobenius() const {
  double s = 0.0;
  for (double x : d_) s += x * x;
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double x : d_) m = std::max(m, std::abs(x));
  return m;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat operator*(const Mat& a, const Mat& b) {
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vec operator*(const Mat& a, const Vec& x) {
  Vec y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

namespace {

double offdiag_frobenius(const Mat& s) {
  double sum = 0.0;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (i != j) sum += s(i, j) * s(i, j);
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigensymm(Mat s, double rel_tol, int max_sweeps) {
  const int n = s.rows();
  Mat v = Mat::identity(n);
  const double scale = s.frobenius();
  const double stop = rel_tol * scale;

  int sweep = 0;
  if (scale > 0.0) {
    for (; sweep < max_sweeps; ++sweep) {
      if (offdiag_frobenius(s) < stop) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          double spq = s(p, q);
          if (spq == 0.0) continue;
          double theta = (s(q, q) - s(p, p)) / (2.0 * spq);
          double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          double c = 1.0 / std::sqrt(t * t + 1.0);
          double sn = t * c;
          double tau = sn / (1.0 + c);

          s(p, p) -= t * spq;
          s(q, q) += t * spq;
          s(p, q) = 0.0;
          s(q, p) = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            double g = s(k, p);
            double h = s(k, q);
            s(k, p) = g - sn * (h + tau * g);
            s(p, k) = s(k, p);
            s(k, q) = h + sn * (g - tau * h);
            s(q, k) = s(k, q);
          }
          for (int k = 0; k < n; ++k) {
            double g = v(k, p);
            double h = v(k, q);
            v(k, p) = g - sn * (h + tau * g);
            v(k, q) = h + sn * (g - tau * h);
          }
        }
      }
    }
    if (offdiag_frobenius(s) >= stop)
      throw ConvergenceFailure("jacobi eigensolver: off-diagonal norm did not reach " +
                               std::to_string(stop) + " within " +
                               std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s(a, a) < s(b, b); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = s(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  out.sweeps = sweep;
  return out;
}

Vec singular_values(const Mat& a, int max_sweeps) {
  Mat w(a);
  const int m = w.cols();
  const int rows = w.rows();
  const double tol = 1e-15;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    int rotations = 0;
    for (int p = 0; p < m - 1; ++p) {
      for (int q = p + 1; q < m; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < rows; ++i) {
          app += w(i, p) * w(i, p);
          aqq += w(i, q) * w(i, q);
          apq += w(i, p) * w(i, q);
        }
        if (app == 0.0 || aqq == 0.0) continue;
        if (std::abs(apq) <= tol * std::sqrt(app * aqq)) continue;
        ++rotations;
        double zeta = (aqq - app) / (2.0 * apq);
        double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * c;
        for (int i = 0; i < rows; ++i) {
          double g = w(i, p);
          double h = w(i, q);
          w(i, p) = c * g - sn * h;
          w(i, q) = sn * g + c * h;
        }
      }
    }
    if (rotations == 0) break;
    if (sweep == max_sweeps - 1)
      throw ConvergenceFailure("one-sided jacobi svd did not converge");
  }

  Vec sigma(m);
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += w(i, j) * w(i, j);
    sigma[j] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

int nullity(const Mat& a, double rel_tol) {
  Vec sigma = singular_values(a);
  if (sigma.empty()) return 0;
  double smax = sigma.front();
  if (smax == 0.0) return static_cast<int>(sigma.size());
  int count = 0;
  for (double s : sigma)
    if (s < rel_tol * smax) ++count;
  return count;
}

double determinant(Mat a) {
  const int n = a.rows();
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      double f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

int rank_gauss(Mat a, double rel_tol) {
  const int rows = a.rows(), cols = a.cols();
  const double thr = rel_tol * std::max(a.max_abs(), 1.0);
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = row;
    for (int i = row + 1; i < rows; ++i)
      if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
    if (std::abs(a(piv, col)) <= thr) continue;
    if (piv != row)
      for (int j = 0; j < cols; ++j) std::swap(a(row, j), a(piv, j));
    for (int i = row + 1; i < rows; ++i) {
      double f = a(i, col) / a(row, col);
      for (int j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace nilgeo
