#include "nilgeo/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"

namespace nilgeo {

SkewMatrix::SkewMatrix(Mat entries, double tol) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols())
    throw DimensionMismatch("skew matrix must be square, got " +
                            std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  if (m_.rows() < 2)
    throw DimensionMismatch("skew matrix dimension must be >= 2, got " +
                            std::to_string(m_.rows()));
  double res = skew_residual();
  double scale = std::max(1.0, m_.frobenius());
  if (res > tol * scale)
    throw NotSkew("skewness residual " + std::to_string(res) + " exceeds " +
                  std::to_string(tol) + " * " + std::to_string(scale));
}

double SkewMatrix::skew_residual() const {
  double s = 0.0;
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j < m_.cols(); ++j) {
      double d = m_(i, j) + m_(j, i);
      s += d * d;
    }
  return std::sqrt(s);
}

std::vector<double> SpectralData::pair_lambdas() const {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.lambda);
  return out;
}

double SpectralData::lambda_min() const {
  if (frequencies.empty())
    throw NumericalError("lambda_min undefined: no positive frequencies");
  return frequencies.front().lambda;
}

double SpectralData::lambda_max() const {
  if (frequencies.empty())
    throw NumericalError("lambda_max undefined: no positive frequencies");
  return frequencies.back().lambda;
}

namespace {

// Greedy pairing inside one eigenspace of S = -Z^2. Candidates are the
// orthonormal eigenvectors for the group; each accepted B is followed by
// C = Z B, and later candidates are projected against both.
void build_pairs(const SkewMatrix& z, const Mat& vectors,
                 const std::vector<int>& members, double lambda, int mult,
                 std::vector<SpectralPair>& out) {
  std::vector<Vec> candidates;
  candidates.reserve(members.size());
  for (int idx : members) candidates.push_back(vectors.col(idx));

  std::vector<Vec> chosen;  // B_1, C_1/||C_1||, B_2, ...
  for (int pair = 0; pair < mult; ++pair) {
    int best = -1;
    double best_norm = 0.0;
    Vec best_res;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      Vec res = candidates[c];
      for (const Vec& u : chosen) axpy(-dot(res, u), u, res);
      double n = norm(res);
      if (n > best_norm) {
        best_norm = n;
        best = static_cast<int>(c);
        best_res = std::move(res);
      }
    }
    if (best < 0 || best_norm < 1e-6)
      throw DegenerateFrame("could not extract pair " + std::to_string(pair + 1) +
                            " of " + std::to_string(mult) + " for frequency " +
                            std::to_string(lambda));
    Vec b = scaled(best_res, 1.0 / best_norm);
    Vec c = z.entries() * b;
    double cn = norm(c);
    if (cn < 1e-12)
      throw DegenerateFrame("Z B vanished for frequency " + std::to_string(lambda));

    SpectralPair sp;
    sp.lambda = lambda;
    sp.b = b;
    sp.c = c;
    out.push_back(sp);

    chosen.push_back(std::move(b));
    chosen.push_back(scaled(c, 1.0 / cn));
  }
}

}  // namespace

SpectralData spectral_decompose(const SkewMatrix& z, double tol) {
  const int q = z.dim();
  {
    double res = z.skew_residual();
    double scale = std::max(1.0, z.norm());
    if (res > tol * scale)
      throw NotSkew("spectral_decompose: skewness residual " + std::to_string(res) +
                    " exceeds tolerance");
  }

  // S = -Z^2 = Z^T Z is symmetric positive semidefinite; its eigenvalues
  // are lambda^2, each nonzero one with even multiplicity.
  Mat s = z.entries().transpose() * z.entries();
  SymmetricEigen eig = jacobi_eigensymm(s);

  SpectralData data;
  data.dim = q;
  data.norm_z = z.norm();

  const double kernel_thr = defaults::kernel_tol * std::max(s.frobenius(), 1.0);

  std::vector<int> nonzero;
  for (int i = 0; i < q; ++i) {
    if (eig.values[i] < kernel_thr) {
      data.kernel.push_back(eig.vectors.col(i));
    } else {
      nonzero.push_back(i);
    }
  }
  data.kernel_dim = static_cast<int>(data.kernel.size());

  // Group the remaining sqrt-eigenvalues into frequencies.
  std::size_t i = 0;
  while (i < nonzero.size()) {
    std::vector<int> members{nonzero[i]};
    double lambda_i = std::sqrt(std::max(eig.values[nonzero[i]], 0.0));
    double last = lambda_i;
    double sum = lambda_i;
    std::size_t k = i + 1;
    for (; k < nonzero.size(); ++k) {
      double lam = std::sqrt(std::max(eig.values[nonzero[k]], 0.0));
      if (lam - last >= defaults::group_tol * std::max({lam, last, 1.0})) break;
      members.push_back(nonzero[k]);
      sum += lam;
      last = lam;
    }
    if (members.size() % 2 != 0)
      throw DegenerateFrame("eigenspace of -Z^2 near lambda = " + std::to_string(lambda_i) +
                            " has odd dimension " + std::to_string(members.size()));
    double lambda = sum / static_cast<double>(members.size());
    int mult = static_cast<int>(members.size()) / 2;
    data.frequencies.push_back(Frequency{lambda, mult});
    build_pairs(z, eig.vectors, members, lambda, mult, data.pairs);
    i = k;
  }

  for (const auto& f : data.frequencies) data.M += f.mult;
  if (data.kernel_dim + 2 * data.M != q)
    throw DegenerateFrame("pair/kernel count mismatch: r + 2M = " +
                          std::to_string(data.kernel_dim + 2 * data.M) +
                          " but q = " + std::to_string(q));
  return data;
}

double ricci_central(const SkewMatrix& z) {
  double n = z.norm();
  return 0.25 * n * n;
}

}  // namespace nilgeo
