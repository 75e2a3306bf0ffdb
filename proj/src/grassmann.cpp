#include "nilgeo/grassmann.hpp"

#include <cmath>
#include <string>

#include "nilgeo/errors.hpp"
#include "nilgeo/genericity.hpp"
#include "nilgeo/rng.hpp"

namespace nilgeo {

namespace {

Mat gaussian_skew(int q, std::mt19937_64& g) {
  Mat m(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      double x = rng::gaussian(g);
      m(i, j) = x;
      m(j, i) = -x;
    }
  return m;
}

}  // namespace

SubspaceW sample_plane(const SamplerConfig& cfg, std::uint64_t draw_index) {
  const int q = cfg.q, p = cfg.p;
  if (q < 2) throw BadInput("sample_plane: q must be >= 2");
  const int dim_so = q * (q - 1) / 2;
  if (p < 1 || p > dim_so)
    throw BadInput("sample_plane: p must be in [1, " + std::to_string(dim_so) +
                   "] for q = " + std::to_string(q));

  auto g = rng::stream(cfg.seed, draw_index);
  // a fresh draw is almost surely independent; the retry loop exists for
  // the measure-zero failures only
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Mat> ortho;
    bool degenerate = false;
    for (int k = 0; k < p && !degenerate; ++k) {
      Mat v = gaussian_skew(q, g);
      double before = std::sqrt(trace_inner(v, v));
      for (int pass = 0; pass < 2; ++pass)
        for (const Mat& u : ortho) {
          double c = trace_inner(v, u);
          v = v - c * u;
        }
      double after = std::sqrt(trace_inner(v, v));
      if (after < defaults::dep_tol * std::max(before, 1.0)) {
        degenerate = true;
        break;
      }
      ortho.push_back((1.0 / after) * v);
    }
    if (degenerate) continue;
    SubspaceW w;
    w.q = q;
    w.p = p;
    for (Mat& m : ortho) w.basis.emplace_back(std::move(m), 1e-6);
    return w;
  }
  throw DegenerateDraw("sample_plane: 8 consecutive degenerate draws at index " +
                       std::to_string(draw_index));
}

Mat random_orthogonal(int q, std::uint64_t seed, std::uint64_t draw_index) {
  if (q < 1) throw BadInput("random_orthogonal: q must be >= 1");
  auto g = rng::stream(seed, draw_index);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mat a(q, q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) a(i, j) = rng::gaussian(g);
    Mat out(q, q);
    bool degenerate = false;
    std::vector<Vec> cols;
    for (int j = 0; j < q; ++j) {
      Vec v = a.col(j);
      double before = norm(v);
      for (int pass = 0; pass < 2; ++pass)
        for (const Vec& u : cols) axpy(-dot(v, u), u, v);
      double after = norm(v);
      if (after < defaults::dep_tol * std::max(before, 1.0)) {
        degenerate = true;
        break;
      }
      Vec u = scaled(v, 1.0 / after);
      out.set_col(j, u);
      cols.push_back(std::move(u));
    }
    if (!degenerate) return out;
  }
  throw DegenerateDraw("random_orthogonal: 8 consecutive degenerate draws");
}

namespace {

// Unit coordinate vector in R^p; redraws the (measure-zero) near-zero case.
Vec unit_coords(int p, std::mt19937_64& g) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    Vec c(p);
    for (int k = 0; k < p; ++k) c[k] = rng::gaussian(g);
    double n = norm(c);
    if (n > 1e-8) return scaled(c, 1.0 / n);
  }
  throw DegenerateDraw("unit_coords: 8 consecutive near-zero draws");
}

bool generic_direction(const SubspaceW& w, const Vec& coords, double tol) {
  Mat z(w.q, w.q);
  for (int k = 0; k < w.p; ++k) {
    const Mat& b = w.basis[k].entries();
    for (int i = 0; i < w.q; ++i)
      for (int j = 0; j < w.q; ++j) z(i, j) += coords[k] * b(i, j);
  }
  return in_O_membership(SkewMatrix(z, 1e-6), tol).member();
}

}  // namespace

double estimate_O_fraction_in_plane(const SubspaceW& w, int samples, std::uint64_t seed,
                                    double tol, std::vector<char>* verdicts) {
  if (samples < 1) throw BadInput("estimate_O_fraction_in_plane: samples must be >= 1");
  if (verdicts) verdicts->clear();
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    auto g = rng::stream(seed, static_cast<std::uint64_t>(i));
    bool ok = generic_direction(w, unit_coords(w.p, g), tol);
    if (ok) ++hits;
    if (verdicts) verdicts->push_back(ok ? 1 : 0);
  }
  return static_cast<double>(hits) / samples;
}

double estimate_U_fraction(int p, int q, int plane_samples, int dir_samples,
                           std::uint64_t seed, double tol, std::vector<char>* verdicts) {
  if (plane_samples < 1 || dir_samples < 1)
    throw BadInput("estimate_U_fraction: sample counts must be >= 1");
  if (verdicts) verdicts->clear();
  SamplerConfig cfg{seed, p, q, plane_samples};
  int hits = 0;
  for (int i = 0; i < plane_samples; ++i) {
    SubspaceW w = sample_plane(cfg, static_cast<std::uint64_t>(i));
    // directions get their own stream family, disjoint from the plane draws
    std::uint64_t dir_seed = rng::mix(seed, 0x64697273ull + i);
    bool hit = false;
    for (int j = 0; j < dir_samples && !hit; ++j) {
      auto g = rng::stream(dir_seed, static_cast<std::uint64_t>(j));
      hit = generic_direction(w, unit_coords(p, g), tol);
    }
    if (hit) ++hits;
    if (verdicts) verdicts->push_back(hit ? 1 : 0);
  }
  return static_cast<double>(hits) / plane_samples;
}

}  // namespace nilgeo
