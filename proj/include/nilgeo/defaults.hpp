#pragma once

// Numerical thresholds shared across the library. These are part of the
// documented contract of the operations that use them; treat a change
// here as an interface change.
namespace nilgeo::defaults {

// Skew-symmetry residual, relative to max(1, ||Z||_F).
inline constexpr double skew_tol = 1e-9;

// Frequencies closer than this (relative) are merged into one.
inline constexpr double group_tol = 1e-7;

// Eigenvalues of -Z^2 below kernel_tol * max(||-Z^2||_F, 1) count as zero.
inline constexpr double kernel_tol = 1e-10;

// Adapted-frame consistency checks (orthonormality, reconstruction).
inline constexpr double frame_tol = 1e-8;

// Absolute distance of lambda*t/(2 pi) or of a frequency ratio from the
// nearest integer.
inline constexpr double integer_tol = 1e-7;

// Conjugate values closer than this (relative on t) are one value.
inline constexpr double merge_tol = 1e-9;

// Singular values below nullity_tol * sigma_max count as zero.
inline constexpr double nullity_tol = 1e-8;

// Residual of g^T g = I for orthogonal conjugation.
inline constexpr double orth_tol = 1e-10;

// Gram-Schmidt dependence detection.
inline constexpr double dep_tol = 1e-10;

// Jacobi eigensolver stops when the off-diagonal Frobenius norm drops
// below eig_off_tol * ||S||_F.
inline constexpr double eig_off_tol = 1e-12;

// Central-difference step for the ODE residual check.
inline constexpr double fd_step = 1e-4;

// Coefficient-wise characteristic polynomial comparison, relative.
inline constexpr double char_poly_tol = 1e-9;

}  // namespace nilgeo::defaults
