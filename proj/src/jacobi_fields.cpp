#include "nilgeo/jacobi_fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"

namespace nilgeo {

FrameBasis frame_from_algebra(const StandardAlgebra& alg, const CentralElement& z) {
  FrameBasis frame;
  frame.spec = spectral_decompose(j_map(alg, z));
  frame.center_basis = alg.W.basis;
  frame.center_dim = alg.W.p;
  return frame;
}

FrameBasis frame_from_spectral(SpectralData spec, int center_dim) {
  if (center_dim < 0) throw BadInput("frame_from_spectral: negative center dimension");
  FrameBasis frame;
  frame.spec = std::move(spec);
  frame.center_dim = center_dim;
  return frame;
}

JacobiCoeffs JacobiCoeffs::zero(const FrameBasis& frame) {
  JacobiCoeffs c;
  c.kernel.assign(frame.r(), {0.0, 0.0});
  c.pairs.assign(frame.pair_count(), PairCoeffs{});
  c.center.assign(frame.s(), {0.0, 0.0});
  return c;
}

namespace {

void check_shape(const JacobiCoeffs& coeffs, const FrameBasis& frame,
                 const char* where) {
  if (static_cast<int>(coeffs.kernel.size()) != frame.r() ||
      static_cast<int>(coeffs.pairs.size()) != frame.pair_count() ||
      static_cast<int>(coeffs.center.size()) != frame.s())
    throw DimensionMismatch(std::string(where) + ": coefficient shape does not match frame");
}

}  // namespace

Vec eval_jacobi(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t) {
  check_shape(coeffs, frame, "eval_jacobi");
  const int r = frame.r(), m = frame.pair_count(), s = frame.s();
  const std::vector<double> lambdas = frame.spec.pair_lambdas();
  Vec out(frame.n());
  int at = 0;
  for (int i = 0; i < r; ++i) out[at++] = coeffs.kernel[i][0] + coeffs.kernel[i][1] * t;
  for (int j = 0; j < m; ++j) {
    const PairCoeffs& p = coeffs.pairs[j];
    double lt = lambdas[j] * t;
    out[at++] = p.alpha * std::cos(lt) + p.beta * std::sin(lt) + p.gamma;
  }
  for (int j = 0; j < m; ++j) {
    const PairCoeffs& p = coeffs.pairs[j];
    double l = lambdas[j];
    double lt = l * t;
    out[at++] = -(p.beta / l) * std::cos(lt) + (p.alpha / l) * std::sin(lt) + p.delta;
  }
  for (int a = 0; a < s; ++a) out[at++] = coeffs.center[a][0] + coeffs.center[a][1] * t;
  return out;
}

Vec covariant_coeffs(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t) {
  check_shape(coeffs, frame, "covariant_coeffs");
  const int r = frame.r(), m = frame.pair_count(), s = frame.s();
  const std::vector<double> lambdas = frame.spec.pair_lambdas();
  Vec out(frame.n());
  int at = 0;
  for (int i = 0; i < r; ++i) out[at++] = coeffs.kernel[i][1];
  for (int j = 0; j < m; ++j) {
    const PairCoeffs& p = coeffs.pairs[j];
    double l = lambdas[j];
    double lt = l * t;
    double b_prime = -p.alpha * l * std::sin(lt) + p.beta * l * std::cos(lt);
    double c_val = -(p.beta / l) * std::cos(lt) + (p.alpha / l) * std::sin(lt) + p.delta;
    out[at++] = b_prime + 0.5 * l * l * c_val;
  }
  for (int j = 0; j < m; ++j) {
    const PairCoeffs& p = coeffs.pairs[j];
    double l = lambdas[j];
    double lt = l * t;
    double b_val = p.alpha * std::cos(lt) + p.beta * std::sin(lt) + p.gamma;
    double c_prime = p.beta * std::sin(lt) + p.alpha * std::cos(lt);
    out[at++] = -0.5 * b_val + c_prime;
  }
  for (int a = 0; a < s; ++a) out[at++] = coeffs.center[a][1];
  return out;
}

std::vector<JacobiCoeffs> basis_fields(const FrameBasis& frame) {
  std::vector<JacobiCoeffs> fields;
  fields.reserve(2 * frame.n());
  for (int i = 0; i < frame.r(); ++i) {  // A_i
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.kernel[i][0] = 1.0;
    fields.push_back(f);
  }
  for (int i = 0; i < frame.r(); ++i) {  // t A_i
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.kernel[i][1] = 1.0;
    fields.push_back(f);
  }
  for (int a = 0; a < frame.s(); ++a) {  // Z_a
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.center[a][0] = 1.0;
    fields.push_back(f);
  }
  for (int a = 0; a < frame.s(); ++a) {  // t Z_a
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.center[a][1] = 1.0;
    fields.push_back(f);
  }
  for (int j = 0; j < frame.pair_count(); ++j) {
    JacobiCoeffs v = JacobiCoeffs::zero(frame);
    v.pairs[j].gamma = 1.0;  // V_j = B_j
    fields.push_back(v);
    JacobiCoeffs w = JacobiCoeffs::zero(frame);
    w.pairs[j].delta = 1.0;  // W_j = Z B_j
    fields.push_back(w);
    JacobiCoeffs x = JacobiCoeffs::zero(frame);
    x.pairs[j].alpha = 1.0;  // X_j
    fields.push_back(x);
    JacobiCoeffs y = JacobiCoeffs::zero(frame);
    y.pairs[j].beta = 1.0;  // Y_j
    fields.push_back(y);
  }
  return fields;
}

std::vector<JacobiCoeffs> vanishing_basis(const FrameBasis& frame) {
  const std::vector<double> lambdas = frame.spec.pair_lambdas();
  std::vector<JacobiCoeffs> fields;
  fields.reserve(frame.n());
  for (int i = 0; i < frame.r(); ++i) {
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.kernel[i][1] = 1.0;
    fields.push_back(f);
  }
  for (int a = 0; a < frame.s(); ++a) {
    JacobiCoeffs f = JacobiCoeffs::zero(frame);
    f.center[a][1] = 1.0;
    fields.push_back(f);
  }
  for (int j = 0; j < frame.pair_count(); ++j) {
    JacobiCoeffs xi = JacobiCoeffs::zero(frame);  // X_j - V_j
    xi.pairs[j].alpha = 1.0;
    xi.pairs[j].gamma = -1.0;
    fields.push_back(xi);
    JacobiCoeffs eta = JacobiCoeffs::zero(frame);  // Y_j + W_j / lambda_j
    eta.pairs[j].beta = 1.0;
    eta.pairs[j].delta = 1.0 / lambdas[j];
    fields.push_back(eta);
  }
  return fields;
}

EndpointResult endpoint_matrix(const FrameBasis& frame, double t, double tol) {
  if (t <= 0.0) throw BadInput("endpoint_matrix: t must be positive");
  std::vector<JacobiCoeffs> fields = vanishing_basis(frame);
  EndpointResult res;
  res.matrix = Mat(frame.n(), frame.n());
  for (std::size_t col = 0; col < fields.size(); ++col)
    res.matrix.set_col(static_cast<int>(col), eval_jacobi(fields[col], frame, t));
  res.nullity = nullity(res.matrix, tol);
  return res;
}

double ode_residual(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t,
                    double h) {
  check_shape(coeffs, frame, "ode_residual");
  if (h <= 0.0) throw BadInput("ode_residual: h must be positive");
  const int r = frame.r(), m = frame.pair_count(), s = frame.s();
  const std::vector<double> lambdas = frame.spec.pair_lambdas();

  Vec minus = eval_jacobi(coeffs, frame, t - h);
  Vec mid = eval_jacobi(coeffs, frame, t);
  Vec plus = eval_jacobi(coeffs, frame, t + h);

  auto d1 = [&](int idx) { return (plus[idx] - minus[idx]) / (2.0 * h); };
  auto d2 = [&](int idx) { return (plus[idx] - 2.0 * mid[idx] + minus[idx]) / (h * h); };

  double worst = 0.0;
  for (int i = 0; i < r; ++i) worst = std::max(worst, std::abs(d2(i)));
  for (int j = 0; j < m; ++j) {
    double l = lambdas[j];
    worst = std::max(worst, std::abs(d2(r + j) + l * l * d1(r + m + j)));
    worst = std::max(worst, std::abs(d2(r + m + j) - d1(r + j)));
  }
  for (int a = 0; a < s; ++a) worst = std::max(worst, std::abs(d2(r + 2 * m + a)));
  return worst;
}

namespace {

// Covariant derivative coefficients with the coefficient-function
// derivatives replaced by central differences.
Vec covariant_coeffs_fd(const JacobiCoeffs& coeffs, const FrameBasis& frame, double t,
                        double h) {
  const int r = frame.r(), m = frame.pair_count(), s = frame.s();
  const std::vector<double> lambdas = frame.spec.pair_lambdas();
  Vec minus = eval_jacobi(coeffs, frame, t - h);
  Vec mid = eval_jacobi(coeffs, frame, t);
  Vec plus = eval_jacobi(coeffs, frame, t + h);
  auto d1 = [&](int idx) { return (plus[idx] - minus[idx]) / (2.0 * h); };

  Vec out(frame.n());
  int at = 0;
  for (int i = 0; i < r; ++i) out[at++] = d1(i);
  for (int j = 0; j < m; ++j)
    out[at++] = d1(r + j) + 0.5 * lambdas[j] * lambdas[j] * mid[r + m + j];
  for (int j = 0; j < m; ++j) out[at++] = -0.5 * mid[r + j] + d1(r + m + j);
  for (int a = 0; a < s; ++a) out[at++] = d1(r + 2 * m + a);
  return out;
}

double max_abs_diff(const Vec& a, const Vec& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

double derivative_relations_check(const FrameBasis& frame, double t, double h) {
  if (h <= 0.0) throw BadInput("derivative_relations_check: h must be positive");
  const std::vector<double> lambdas = frame.spec.pair_lambdas();
  double worst = 0.0;
  for (int j = 0; j < frame.pair_count(); ++j) {
    double l = lambdas[j];
    JacobiCoeffs v = JacobiCoeffs::zero(frame);
    v.pairs[j].gamma = 1.0;
    JacobiCoeffs w = JacobiCoeffs::zero(frame);
    w.pairs[j].delta = 1.0;
    JacobiCoeffs x = JacobiCoeffs::zero(frame);
    x.pairs[j].alpha = 1.0;
    JacobiCoeffs y = JacobiCoeffs::zero(frame);
    y.pairs[j].beta = 1.0;

    worst = std::max(worst, max_abs_diff(covariant_coeffs_fd(v, frame, t, h),
                                         scaled(eval_jacobi(w, frame, t), -0.5)));
    worst = std::max(worst, max_abs_diff(covariant_coeffs_fd(w, frame, t, h),
                                         scaled(eval_jacobi(v, frame, t), 0.5 * l * l)));
    worst = std::max(worst, max_abs_diff(covariant_coeffs_fd(x, frame, t, h),
                                         scaled(eval_jacobi(y, frame, t), -0.5 * l)));
    worst = std::max(worst, max_abs_diff(covariant_coeffs_fd(y, frame, t, h),
                                         scaled(eval_jacobi(x, frame, t), 0.5 * l)));
  }
  return worst;
}

}  // namespace nilgeo
