#pragma once

#include <vector>

#include "nilgeo/defaults.hpp"
#include "nilgeo/matrix.hpp"

namespace nilgeo {

// q x q real skew-symmetric matrix, q >= 2. In standard form the same
// object serves as a central direction Z and as the operator j(Z) on R^q.
class SkewMatrix {
 public:
  explicit SkewMatrix(Mat entries, double tol = defaults::skew_tol);

  int dim() const { return m_.rows(); }
  const Mat& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double norm() const { return m_.frobenius(); }
  // ||Z + Z^T||_F
  double skew_residual() const;

 private:
  Mat m_;
};

struct Frequency {
  double lambda = 0.0;
  int mult = 0;
};

// One invariant 2-plane of Z: c = Z b, ||c|| = lambda, b unit.
struct SpectralPair {
  double lambda = 0.0;
  Vec b;
  Vec c;
};

// Eigenstructure of a skew matrix: the positive frequencies lambda (so the
// eigenvalues of Z are {0, +-i lambda}) with multiplicities, an orthonormal
// kernel basis A_1..A_r and the adapted pairs (B_j, Z B_j). r + 2M = q.
struct SpectralData {
  int dim = 0;
  std::vector<Frequency> frequencies;  // ascending, merged within group_tol
  int M = 0;                           // total pair count, sum of multiplicities
  int kernel_dim = 0;
  std::vector<Vec> kernel;
  std::vector<SpectralPair> pairs;  // ascending lambda; construction order within one
  double norm_z = 0.0;

  // lambda repeated per pair, aligned with pairs.
  std::vector<double> pair_lambdas() const;
  double lambda_min() const;  // throws NumericalError when M = 0
  double lambda_max() const;
};

SpectralData spectral_decompose(const SkewMatrix& z, double tol = defaults::skew_tol);

// Ricci curvature in the central direction: trace(-Z^2 / 4) = ||Z||_F^2 / 4.
double ricci_central(const SkewMatrix& z);

}  // namespace nilgeo
