#pragma once

#include <vector>

#include "nilgeo/defaults.hpp"

namespace nilgeo {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& v);
// y += a * x
void axpy(double a, const Vec& x, Vec& y);
Vec scaled(const Vec& v, double a);

// Dense row-major real matrix. Small sizes only; everything here is O(n^3)
// without blocking and that is fine for the dimensions this library works at.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0);
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transpose() const;
  double frobenius() const;
  double max_abs() const;

  Vec col(int j) const;
  void set_col(int j, const Vec& v);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> d_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);

struct SymmetricEigen {
  Vec values;   // ascending
  Mat vectors;  // columns, aligned with values
  int sweeps = 0;
};

// Cyclic Jacobi rotations on a symmetric matrix. Stops once the
// off-diagonal Frobenius norm is below rel_tol * ||S||_F of the input.
SymmetricEigen jacobi_eigensymm(Mat s, double rel_tol = defaults::eig_off_tol,
                                int max_sweeps = 100);

// Singular values by one-sided Jacobi orthogonalization of the columns,
// descending. Chosen over eig(A^T A) because squaring would lose exactly
// the small singular values the nullity threshold has to resolve.
Vec singular_values(const Mat& a, int max_sweeps = 60);

int nullity(const Mat& a, double rel_tol = defaults::nullity_tol);

// LU with partial pivoting.
double determinant(Mat a);

int rank_gauss(Mat a, double rel_tol = defaults::dep_tol);

}  // namespace nilgeo
