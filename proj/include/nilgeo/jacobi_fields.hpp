#pragma once

#include <array>
#include <vector>

#include "nilgeo/algebra.hpp"
#include "nilgeo/defaults.hpp"
#include "nilgeo/spectral.hpp"

namespace nilgeo {

// Jacobi fields along the central geodesic of Z, expressed in the adapted
// frame {A_i, B_j, Z B_j, Z_alpha}. A field is determined by its
// coefficient functions
//   a_i(t) = c_i + d_i t
//   b_j(t) = alpha_j cos(lambda_j t) + beta_j sin(lambda_j t) + gamma_j
//   c_j(t) = -(beta_j/lambda_j) cos(lambda_j t) + (alpha_j/lambda_j) sin(lambda_j t)
//            + delta_j
//   d_a(t) = e_a + f_a t
// and the covariant derivative has frame coefficients
//   (a_i', b_j' + lambda_j^2 c_j / 2, -b_j/2 + c_j', d_a').

struct FrameBasis {
  SpectralData spec;
  std::vector<SkewMatrix> center_basis;  // may be empty when only counts matter
  int center_dim = 0;

  int r() const { return spec.kernel_dim; }
  int pair_count() const { return spec.M; }
  int s() const { return center_dim; }
  int n() const { return spec.dim + center_dim; }
};

FrameBasis frame_from_algebra(const StandardAlgebra& alg, const CentralElement& z);
FrameBasis frame_from_spectral(SpectralData spec, int center_dim);

struct PairCoeffs {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
};

struct JacobiCoeffs {
  std::vector<std::array<double, 2>> kernel;  // (c_i, d_i)
  std::vector<PairCoeffs> pairs;
  std::vector<std::array<double, 2>> center;  // (e_a, f_a)

  static JacobiCoeffs zero(const FrameBasis& frame);
};

// Frame coefficients of the field at t, ordered (a_i, b_j, c_j, d_a).
Vec eval_jacobi(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t);

// Frame coefficients of the covariant derivative at t, closed-form.
Vec covariant_coeffs(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t);

// The 2n solution basis: A_i, tA_i (i <= r), then Z_a, tZ_a (a <= s), then
// V_j, W_j, X_j, Y_j per pair.
std::vector<JacobiCoeffs> basis_fields(const FrameBasis& frame);

// The n fields vanishing at t = 0: tA_i, tZ_a, xi_j = X_j - V_j,
// eta_j = Y_j + W_j / lambda_j.
std::vector<JacobiCoeffs> vanishing_basis(const FrameBasis& frame);

struct EndpointResult {
  Mat matrix;  // columns are the vanishing basis evaluated at t
  int nullity = 0;
};

// The nullity equals the conjugate multiplicity at t; singular values
// below tol * sigma_max count as zero.
EndpointResult endpoint_matrix(const FrameBasis& frame, double t,
                               double tol = defaults::nullity_tol);

// Max central-difference residual of the frame ODEs
//   a'' = 0, b'' + lambda^2 c' = 0, c'' - b' = 0, d'' = 0
// at t with step h.
double ode_residual(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t,
                    double h = defaults::fd_step);

// Max residual of V' = -W/2, W' = lambda^2 V / 2, X' = -lambda Y / 2,
// Y' = lambda X / 2, with the covariant derivatives taken by central
// differences of the coefficient functions.
double derivative_relations_check(const FrameBasis& frame, double t,
                                  double h = defaults::fd_step);

}  // namespace nilgeo
