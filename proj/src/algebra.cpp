#include "nilgeo/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"
#include "nilgeo/rng.hpp"

namespace nilgeo {

double trace_inner(const Mat& x, const Mat& y) {
  double s = 0.0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) s += x(i, j) * y(i, j);
  return s;
}

namespace {

Mat combination(const SubspaceW& w, const Vec& coords) {
  Mat m(w.q, w.q);
  for (int k = 0; k < w.p; ++k) {
    const Mat& b = w.basis[k].entries();
    for (int i = 0; i < w.q; ++i)
      for (int j = 0; j < w.q; ++j) m(i, j) += coords[k] * b(i, j);
  }
  return m;
}

}  // namespace

StandardAlgebra make_standard(int q, const std::vector<SkewMatrix>& raw_basis) {
  if (raw_basis.empty()) throw BadInput("make_standard: empty basis");
  const int max_p = q * (q - 1) / 2;
  if (static_cast<int>(raw_basis.size()) > max_p)
    throw DependentBasis("make_standard: " + std::to_string(raw_basis.size()) +
                         " matrices cannot be independent in so(" + std::to_string(q) +
                         ")");
  std::vector<Mat> ortho;
  for (std::size_t k = 0; k < raw_basis.size(); ++k) {
    if (raw_basis[k].dim() != q)
      throw DimensionMismatch("make_standard: basis element " + std::to_string(k) +
                              " has dimension " + std::to_string(raw_basis[k].dim()) +
                              ", expected " + std::to_string(q));
    Mat v = raw_basis[k].entries();
    double before = std::sqrt(trace_inner(v, v));
    // two projection passes; classical Gram-Schmidt alone drifts
    for (int pass = 0; pass < 2; ++pass)
      for (const Mat& u : ortho) {
        double c = trace_inner(v, u);
        v = v - c * u;
      }
    double after = std::sqrt(trace_inner(v, v));
    if (after < defaults::dep_tol * std::max(before, 1.0))
      throw DependentBasis("make_standard: basis element " + std::to_string(k) +
                           " is dependent on the previous ones");
    ortho.push_back((1.0 / after) * v);
  }

  StandardAlgebra alg;
  alg.q = q;
  alg.W.q = q;
  alg.W.p = static_cast<int>(ortho.size());
  for (Mat& m : ortho) alg.W.basis.emplace_back(std::move(m));

  // type-(p,q): the coordinates of all [e_i, e_j] span R^p. Row k of the
  // matrix below is basis_k read off the strict lower triangle.
  Mat coeff(alg.W.p, max_p);
  for (int k = 0; k < alg.W.p; ++k) {
    int col = 0;
    const Mat& b = alg.W.basis[k].entries();
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) coeff(k, col++) = b(j, i);
  }
  alg.bracket_generates = (rank_gauss(coeff) == alg.W.p);
  return alg;
}

CentralElement central_element(const StandardAlgebra& alg, const Vec& coords) {
  if (static_cast<int>(coords.size()) != alg.W.p)
    throw DimensionMismatch("central_element: got " + std::to_string(coords.size()) +
                            " coordinates, expected " + std::to_string(alg.W.p));
  return CentralElement{coords, SkewMatrix(combination(alg.W, coords), 1e-6)};
}

CentralElement bracket(const StandardAlgebra& alg, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != alg.q || static_cast<int>(y.size()) != alg.q)
    throw DimensionMismatch("bracket: vectors must have length " + std::to_string(alg.q));
  Vec coords(alg.W.p);
  for (int k = 0; k < alg.W.p; ++k)
    coords[k] = dot(alg.W.basis[k].entries() * x, y);
  return central_element(alg, coords);
}

SkewMatrix j_map(const StandardAlgebra& alg, const CentralElement& z) {
  // adjointness <j(Z) e_i, e_j> = <[e_i, e_j], Z> on the standard basis
  const Mat& m = z.matrix.entries();
  double scale = std::max(1.0, z.matrix.norm());
  for (int i = 0; i < alg.q; ++i) {
    Vec ei(alg.q, 0.0);
    ei[i] = 1.0;
    for (int j = i + 1; j < alg.q; ++j) {
      Vec ej(alg.q, 0.0);
      ej[j] = 1.0;
      CentralElement br = bracket(alg, ei, ej);
      double rhs = dot(br.coords, z.coords);
      if (std::abs(m(j, i) - rhs) > 1e-8 * scale)
        throw NumericalError("j_map adjointness check failed at basis pair (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  return z.matrix;
}

SubspaceW conjugate_plane(const Mat& g, const SubspaceW& w) {
  if (g.rows() != w.q || g.cols() != w.q)
    throw DimensionMismatch("conjugate_plane: g must be " + std::to_string(w.q) + "x" +
                            std::to_string(w.q));
  Mat gtg = g.transpose() * g;
  double res = (gtg - Mat::identity(w.q)).max_abs();
  if (res > defaults::orth_tol)
    throw NotOrthogonal("conjugate_plane: ||g^T g - I|| = " + std::to_string(res));

  SubspaceW out;
  out.q = w.q;
  out.p = w.p;
  Mat gt = g.transpose();
  for (const SkewMatrix& z : w.basis)
    out.basis.emplace_back(g * z.entries() * gt, 1e-6);
  return out;
}

Vec char_poly(const Mat& a) {
  const int n = a.rows();
  Vec c(n + 1, 0.0);
  c[n] = 1.0;
  Mat m = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += m(i, i);
    c[n - k] = -tr / k;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

namespace {

bool poly_close(const Vec& a, const Vec& b, double tol, double* max_dev) {
  double worst = 0.0;
  bool ok = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double scale = std::max({1.0, std::abs(a[k]), std::abs(b[k])});
    double dev = std::abs(a[k] - b[k]) / scale;
    worst = std::max(worst, dev);
    if (dev > tol) ok = false;
  }
  *max_dev = worst;
  return ok;
}

}  // namespace

WeakConjugacyVerdict weak_conjugacy_compare(const SubspaceW& w1, const SubspaceW& w2,
                                            const Mat& phi, int samples,
                                            std::uint64_t seed, double tol) {
  if (w1.p != w2.p)
    throw DimensionMismatch("weak_conjugacy_compare: planes have p = " +
                            std::to_string(w1.p) + " and " + std::to_string(w2.p));
  if (w1.q != w2.q)
    throw DimensionMismatch("weak_conjugacy_compare: planes live in so(" +
                            std::to_string(w1.q) + ") and so(" + std::to_string(w2.q) +
                            ")");
  const int p = w1.p;
  if (phi.rows() != p || phi.cols() != p)
    throw DimensionMismatch("weak_conjugacy_compare: phi must be " + std::to_string(p) +
                            "x" + std::to_string(p));
  if (rank_gauss(phi, 1e-12) < p)
    throw SingularPhi("weak_conjugacy_compare: phi is singular");

  std::vector<Vec> candidates;
  for (int k = 0; k < p; ++k) {
    Vec e(p, 0.0);
    e[k] = 1.0;
    candidates.push_back(e);
  }
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      Vec e(p, 0.0);
      e[a] = 1.0;
      e[b] = 1.0;
      candidates.push_back(e);
    }
  for (int i = 0; i < samples; ++i) {
    auto g = rng::stream(seed, static_cast<std::uint64_t>(i));
    Vec c(p);
    for (int k = 0; k < p; ++k) c[k] = rng::gaussian(g);
    candidates.push_back(c);
  }

  WeakConjugacyVerdict verdict;
  for (const Vec& c : candidates) {
    Mat z1 = combination(w1, c);
    Mat z2 = combination(w2, phi * c);
    Vec p1 = char_poly(z1);
    Vec p2 = char_poly(z2);
    double dev = 0.0;
    if (!poly_close(p1, p2, tol, &dev)) {
      verdict.consistent = false;
      verdict.witness_coords = c;
      verdict.max_coeff_dev = dev;
      verdict.char_poly_1 = p1;
      verdict.char_poly_2 = p2;
      return verdict;
    }
    verdict.max_coeff_dev = std::max(verdict.max_coeff_dev, dev);
  }
  return verdict;
}

}  // namespace nilgeo
