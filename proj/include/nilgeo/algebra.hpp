#pragma once

#include <cstdint>
#include <vector>

#include "nilgeo/defaults.hpp"
#include "nilgeo/spectral.hpp"

namespace nilgeo {

// Inner product trace(X Y^T) on q x q matrices.
double trace_inner(const Mat& x, const Mat& y);

// p-dimensional subspace of so(q) with a trace-form orthonormal basis.
struct SubspaceW {
  int q = 0;
  int p = 0;
  std::vector<SkewMatrix> basis;
};

// Metric 2-step nilpotent Lie algebra R^q + W in standard form. The
// bracket is <[v,w], Z> = (Z v) . w for Z in W, W is the center, and
// j(Z) acts on R^q as Z itself.
struct StandardAlgebra {
  int q = 0;
  SubspaceW W;
  // span{[e_i, e_j]} = W; holds for every independent basis, recorded anyway.
  bool bracket_generates = false;

  int n() const { return q + W.p; }
};

struct CentralElement {
  Vec coords;  // with respect to W.basis
  SkewMatrix matrix;
};

// Orthonormalizes raw_basis under the trace form (Gram-Schmidt with one
// re-orthogonalization pass) and verifies the type-(p,q) condition.
StandardAlgebra make_standard(int q, const std::vector<SkewMatrix>& raw_basis);

CentralElement central_element(const StandardAlgebra& alg, const Vec& coords);

// [x, y] for x, y in R^q, returned as its coordinates in W.
CentralElement bracket(const StandardAlgebra& alg, const Vec& x, const Vec& y);

// The skew operator j(Z); verifies <j(Z)x, y> = <[x,y], Z> on basis pairs.
SkewMatrix j_map(const StandardAlgebra& alg, const CentralElement& z);

// { g Z g^-1 : Z in W } for orthogonal g. Preserves orthonormality.
SubspaceW conjugate_plane(const Mat& g, const SubspaceW& w);

struct WeakConjugacyVerdict {
  bool consistent = true;
  Vec witness_coords;  // empty when consistent
  double max_coeff_dev = 0.0;
  Vec char_poly_1, char_poly_2;  // ascending coefficients at the witness
};

// Sampled comparator for weak conjugacy of two planes through a linear
// map phi: coordinates c are mapped to phi c and the characteristic
// polynomials of the corresponding elements are compared coefficient-wise.
// Tests the p basis directions and all pairwise sums first, then `samples`
// seeded Gaussian coordinate vectors. A refutation is proof; consistency
// is evidence only.
WeakConjugacyVerdict weak_conjugacy_compare(const SubspaceW& w1, const SubspaceW& w2,
                                            const Mat& phi, int samples,
                                            std::uint64_t seed,
                                            double tol = defaults::char_poly_tol);

// Characteristic polynomial det(tI - A), ascending coefficients, by the
// Faddeev-LeVerrier recurrence in doubles.
Vec char_poly(const Mat& a);

}  // namespace nilgeo
