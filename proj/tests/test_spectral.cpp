#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nilgeo/errors.hpp"
#include "nilgeo/matrix.hpp"
#include "nilgeo/spectral.hpp"

using namespace nilgeo;
using namespace testing_support;

namespace {
constexpr double pi = 3.14159265358979323846;

Mat sym_from_seed(int n, unsigned seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      a(i, j) = gauss(g);
      a(j, i) = a(i, j);
    }
  return a;
}
}  // namespace

TEST_CASE("jacobi eigensolver leaves a diagonal matrix alone") {
  Mat d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  SymmetricEigen e = jacobi_eigensymm(d);
  REQUIRE(e.values.size() == 3);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(2.0));
  CHECK(e.values[2] == doctest::Approx(3.0));
}

TEST_CASE("jacobi eigensolver reconstructs random symmetric matrices") {
  for (int n : {2, 4, 7}) {
    Mat a = sym_from_seed(n, 100 + n);
    SymmetricEigen e = jacobi_eigensymm(a);
    for (int j = 0; j < n; ++j) {
      Vec v = e.vectors.col(j);
      Vec av = a * v;
      for (int i = 0; i < n; ++i)
        CHECK(av[i] == doctest::Approx(e.values[j] * v[i]).epsilon(1e-9));
    }
    for (int j = 1; j < n; ++j) CHECK(e.values[j - 1] <= e.values[j]);
    // eigenvector columns are orthonormal
    Mat gram = e.vectors.transpose() * e.vectors;
    CHECK((gram - Mat::identity(n)).max_abs() < 1e-12);
  }
}

TEST_CASE("singular values of a rectangular diagonal matrix") {
  Mat a(3, 2);
  a(0, 0) = 3.0;
  a(1, 1) = 4.0;
  Vec s = singular_values(a);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == doctest::Approx(4.0));
  CHECK(s[1] == doctest::Approx(3.0));
}

TEST_CASE("singular values agree with the eigenvalues of A^T A") {
  Mat a(5, 4);
  std::mt19937_64 g(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = gauss(g);
  Vec s = singular_values(a);
  SymmetricEigen e = jacobi_eigensymm(a.transpose() * a);
  REQUIRE(s.size() == 4);
  for (int j = 0; j < 4; ++j)
    CHECK(s[j] * s[j] == doctest::Approx(e.values[3 - j]).epsilon(1e-10));
}

TEST_CASE("nullity resolves tiny singular values that squaring would lose") {
  // diag(1, 1e-7, 1e-9) against the relative threshold 1e-8
  Mat a(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-7;
  a(2, 2) = 1e-9;
  CHECK(nullity(a) == 1);
}

TEST_CASE("nullity of an outer product matches a row-reduction rank oracle") {
  Vec u{1.0, -2.0, 0.5};
  Mat a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = u[i] * u[j];
  CHECK(nullity(a) == 2);
  CHECK(rank_row_reduction(a, 1e-10) == 1);
  CHECK(nullity(a) + rank_row_reduction(a, 1e-10) == 3);
}

TEST_CASE("determinant by LU") {
  Mat a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  CHECK(determinant(a) == doctest::Approx(-2.0));

  Mat s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = 2.0;
  s(1, 0) = 2.0;
  s(1, 1) = 4.0;
  CHECK(determinant(s) == doctest::Approx(0.0));
}

TEST_CASE("rank_gauss agrees with the row-reduction oracle on random matrices") {
  std::mt19937_64 g(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 3 + static_cast<int>(g() % 4);
    int cols = 3 + static_cast<int>(g() % 4);
    int r = 1 + static_cast<int>(g() % 3);
    // random rank-r product
    Mat u(rows, r), v(r, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < r; ++j) u(i, j) = gauss(g);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols; ++j) v(i, j) = gauss(g);
    Mat a = u * v;
    int expected = std::min(r, std::min(rows, cols));
    CHECK(rank_gauss(a, 1e-9) == expected);
    CHECK(rank_row_reduction(a, 1e-9 * std::max(a.max_abs(), 1.0)) == expected);
  }
}

TEST_CASE("skew matrix constructor rejects bad shapes and asymmetry") {
  CHECK_THROWS_AS(SkewMatrix(Mat(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(SkewMatrix(Mat(1, 1)), DimensionMismatch);
  Mat sym(2, 2);
  sym(0, 1) = 1.0;
  sym(1, 0) = 1.0;
  CHECK_THROWS_AS(SkewMatrix{sym}, NotSkew);
}

TEST_CASE("skew residual measures ||Z + Z^T||") {
  Mat m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0 + 1e-3;
  CHECK_THROWS_AS(SkewMatrix{m}, NotSkew);
  SkewMatrix loose(m, 1e-2);
  CHECK(loose.skew_residual() == doctest::Approx(std::sqrt(2.0) * 1e-3));
}

TEST_CASE("rotation generator J has frequency 1") {
  SkewMatrix z(rotation_block(1.0));
  SpectralData spec = spectral_decompose(z);
  CHECK(spec.dim == 2);
  CHECK(spec.kernel_dim == 0);
  CHECK(spec.M == 1);
  REQUIRE(spec.frequencies.size() == 1);
  CHECK(spec.frequencies[0].lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.frequencies[0].mult == 1);
  CHECK(spec.lambda_min() == spec.lambda_max());
}

TEST_CASE("Heisenberg direction J/sqrt(2) has frequency 1/sqrt(2)") {
  SkewMatrix z(rotation_block(1.0 / std::sqrt(2.0)));
  SpectralData spec = spectral_decompose(z);
  REQUIRE(spec.frequencies.size() == 1);
  CHECK(spec.frequencies[0].lambda == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(spec.norm_z == doctest::Approx(1.0));
}

TEST_CASE("two rotation blocks give two simple frequencies") {
  SpectralData spec = spectral_decompose(block_skew({1.0, 2.0}));
  REQUIRE(spec.frequencies.size() == 2);
  CHECK(spec.frequencies[0].lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.frequencies[1].lambda == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spec.frequencies[0].mult == 1);
  CHECK(spec.frequencies[1].mult == 1);
  CHECK(spec.M == 2);
  CHECK(spec.kernel_dim == 0);
  std::vector<double> pl = spec.pair_lambdas();
  REQUIRE(pl.size() == 2);
  CHECK(pl[0] == doctest::Approx(1.0));
  CHECK(pl[1] == doctest::Approx(2.0));
}

TEST_CASE("a zero row and column produce a one-dimensional kernel") {
  SpectralData spec = spectral_decompose(block_skew({1.0}, 1));
  CHECK(spec.dim == 3);
  CHECK(spec.kernel_dim == 1);
  CHECK(spec.M == 1);
  REQUIRE(spec.kernel.size() == 1);
  // kernel vector is +-e_3
  CHECK(std::abs(spec.kernel[0][2]) == doctest::Approx(1.0));
  CHECK(std::abs(spec.kernel[0][0]) < 1e-10);
  CHECK(std::abs(spec.kernel[0][1]) < 1e-10);
}

TEST_CASE("equal blocks merge into one frequency of multiplicity two") {
  SpectralData spec = spectral_decompose(block_skew({1.0, 1.0}));
  REQUIRE(spec.frequencies.size() == 1);
  CHECK(spec.frequencies[0].lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.frequencies[0].mult == 2);
  CHECK(spec.M == 2);
  REQUIRE(spec.pairs.size() == 2);
}

TEST_CASE("the zero matrix has no frequencies at all") {
  SkewMatrix z(Mat(2, 2));
  SpectralData spec = spectral_decompose(z);
  CHECK(spec.M == 0);
  CHECK(spec.kernel_dim == 2);
  CHECK(spec.frequencies.empty());
  CHECK_THROWS_AS(spec.lambda_min(), NumericalError);
  CHECK_THROWS_AS(spec.lambda_max(), NumericalError);
}

TEST_CASE("adapted frame is orthonormal and reproduces the eigenstructure") {
  std::mt19937_64 g(42);
  for (int q : {4, 5, 6, 7}) {
    SkewMatrix z = random_skew(q, g);
    SpectralData spec = spectral_decompose(z);
    CHECK(spec.kernel_dim + 2 * spec.M == q);

    // assemble the frame columns A_1..A_r, B_1, C_1/lambda_1, ...
    Mat frame(q, q);
    int col = 0;
    for (const Vec& a : spec.kernel) frame.set_col(col++, a);
    for (const SpectralPair& p : spec.pairs) {
      frame.set_col(col++, p.b);
      frame.set_col(col++, scaled(p.c, 1.0 / p.lambda));
    }
    REQUIRE(col == q);
    CHECK((frame.transpose() * frame - Mat::identity(q)).max_abs() <
          defaults::frame_tol);

    // C = Z B with norm lambda, and -Z^2 B = lambda^2 B
    Mat s = z.entries().transpose() * z.entries();
    for (const SpectralPair& p : spec.pairs) {
      Vec zb = z.entries() * p.b;
      for (int i = 0; i < q; ++i) CHECK(zb[i] == doctest::Approx(p.c[i]).epsilon(1e-10));
      CHECK(norm(p.c) == doctest::Approx(p.lambda).epsilon(1e-9));
      Vec sb = s * p.b;
      for (int i = 0; i < q; ++i)
        CHECK(sb[i] == doctest::Approx(p.lambda * p.lambda * p.b[i]).epsilon(1e-7));
    }
    for (const Vec& a : spec.kernel) {
      Vec za = z.entries() * a;
      CHECK(norm(za) < 1e-7 * std::max(1.0, z.norm()));
    }
  }
}

TEST_CASE("spectral frequencies are the rotation rates of the blocks") {
  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> lambdas;
    int pairs = 1 + static_cast<int>(g() % 3);
    for (int i = 0; i < pairs; ++i) lambdas.push_back(u(g));
    std::sort(lambdas.begin(), lambdas.end());
    bool separated = true;
    for (int i = 1; i < pairs; ++i)
      if (lambdas[i] - lambdas[i - 1] < 1e-3) separated = false;
    if (!separated) continue;

    SpectralData spec = spectral_decompose(block_skew(lambdas, trial % 2));
    REQUIRE(static_cast<int>(spec.frequencies.size()) == pairs);
    for (int i = 0; i < pairs; ++i)
      CHECK(spec.frequencies[i].lambda == doctest::Approx(lambdas[i]).epsilon(1e-11));
  }
}

TEST_CASE("ricci curvature in the central direction is a quarter of the squared norm") {
  CHECK(ricci_central(SkewMatrix(rotation_block(1.0))) == doctest::Approx(0.5));
  CHECK(ricci_central(block_skew({1.0, 2.0})) == doctest::Approx(2.5));
  // quadratic under scaling
  std::mt19937_64 g(3);
  SkewMatrix z = random_skew(5, g);
  double base = ricci_central(z);
  SkewMatrix z3(3.0 * z.entries());
  CHECK(ricci_central(z3) == doctest::Approx(9.0 * base));
}

TEST_CASE("spectral decomposition rejects a near-skew matrix outside tolerance") {
  Mat m = rotation_block(1.0);
  m(0, 1) += 1e-4;
  CHECK_THROWS_AS(SkewMatrix{m}, NotSkew);
}

TEST_CASE("frequencies appear at t = 2 pi / period of the block rotation") {
  // one full rotation of exp(t Z) on a lambda block takes t = 2 pi / lambda
  SpectralData spec = spectral_decompose(block_skew({0.5}));
  CHECK(2.0 * pi / spec.frequencies[0].lambda == doctest::Approx(4.0 * pi));
}
