#include <gtest/gtest.h>

#include <random>

#include "crtube/errors.hpp"
#include "crtube/linalg.hpp"
#include "crtube/polynomial.hpp"
#include "crtube/series.hpp"

using namespace crtube;

namespace {

Matrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return Matrix::from_rows(r);
}

bool in_kernel(const Matrix& m, const Vector& v) { return is_zero_vector(m.apply(v)); }

Matrix random_integer_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(d(rng)));
  return m;
}

}  // namespace

TEST(Scalar, RationalsStayInLowestTerms) {
  Scalar a = Scalar::ratio(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_TRUE(a.is_exact());
  Scalar b = a * Scalar::ratio(2, 3);
  EXPECT_EQ(b.to_string(), "-1");
}

TEST(Scalar, MixingModesGoesNumeric) {
  Scalar a = Scalar::ratio(1, 3) + Scalar(0.5);
  EXPECT_FALSE(a.is_exact());
  EXPECT_NEAR(a.to_double(), 5.0 / 6.0, 1e-15);
}

TEST(Scalar, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Scalar::parse("4/6").to_string(), "2/3");
  EXPECT_TRUE(Scalar::parse("-7").is_exact());
  EXPECT_FALSE(Scalar::parse("1.25").is_exact());
  EXPECT_THROW(Scalar::parse("1/0"), InputError);
  EXPECT_THROW(Scalar::parse("abc"), InputError);
}

TEST(Nullspace, IdentityHasEmptyKernel) {
  EXPECT_TRUE(nullspace(Matrix::identity(2)).empty());
  EXPECT_TRUE(nullspace(Matrix::identity(2, Mode::numeric)).empty());
}

TEST(Nullspace, ZeroMatrixHasFullKernel) {
  EXPECT_EQ(nullspace(Matrix(2, 2)).size(), 2u);
  EXPECT_EQ(nullspace(Matrix(2, 2, Mode::numeric)).size(), 2u);
}

TEST(Nullspace, RankOneSymmetric) {
  Matrix m = rat({{1, 1}, {1, 1}});
  auto k = nullspace(m);
  ASSERT_EQ(k.size(), 1u);
  // Reduced-echelon basis: free coordinate set to 1.
  EXPECT_EQ(k[0][0], Scalar(-1));
  EXPECT_EQ(k[0][1], Scalar(1));
  auto kn = nullspace(m.to_mode(Mode::numeric));
  ASSERT_EQ(kn.size(), 1u);
  EXPECT_NEAR(kn[0][0].to_double() + kn[0][1].to_double(), 0.0, 1e-12);
}

TEST(Nullspace, ExactRankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    Matrix m = random_integer_matrix(r, c, rng);
    if (t % 3 == 0 && r > 1) {
      // Force a dependent row.
      for (std::size_t j = 0; j < c; ++j) m.set(r - 1, j, m(0, j) * Scalar(2) - m(1 % r, j));
    }
    auto k = nullspace(m);
    for (const auto& v : k) EXPECT_TRUE(in_kernel(m, v));
    EXPECT_EQ(k.size() + rank(m), c);
  }
}

TEST(Nullspace, NumericAgreesWithExactOverToleranceRange) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix a = random_integer_matrix(4, 3, rng);
    Matrix b = random_integer_matrix(3, 6, rng);
    Matrix m = a * b;  // rank <= 3
    const std::size_t exact = nullspace(m).size();
    for (double tol : {1e-10, 1e-8, 1e-6}) EXPECT_EQ(nullspace(m.to_mode(Mode::numeric), tol).size(), exact);
  }
}

TEST(CharPoly, Diagonal) {
  Matrix m(3, 3);
  m.set(0, 0, 1);
  m.set(1, 1, 2);
  m.set(2, 2, 3);
  CharPoly cp = char_poly_and_eigs(m);
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  ASSERT_EQ(cp.coefficients.size(), 4u);
  EXPECT_EQ(cp.coefficients[0], Scalar(-6));
  EXPECT_EQ(cp.coefficients[1], Scalar(11));
  EXPECT_EQ(cp.coefficients[2], Scalar(-6));
  EXPECT_EQ(cp.coefficients[3], Scalar(1));
  EXPECT_TRUE(cp.splits_over_rationals);
  ASSERT_EQ(cp.eigenvalues.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(cp.eigenvalues[i] - Complex(i + 1, 0)), 0.0, 1e-12);
}

TEST(CharPoly, Rotation) {
  Matrix m = rat({{0, -1}, {1, 0}});
  CharPoly cp = char_poly_and_eigs(m);
  EXPECT_EQ(cp.coefficients[0], Scalar(1));
  EXPECT_EQ(cp.coefficients[1], Scalar(0));
  EXPECT_FALSE(cp.splits_over_rationals);
  ASSERT_EQ(cp.eigenvalues.size(), 2u);
  EXPECT_NEAR(std::abs(cp.eigenvalues[0] - Complex(0, -1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(cp.eigenvalues[1] - Complex(0, 1)), 0.0, 1e-12);
}

TEST(CharPoly, NilpotentJordanBlock) {
  Matrix m = rat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CharPoly cp = char_poly_and_eigs(m);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(cp.coefficients[i], Scalar(0));
  EXPECT_EQ(cp.rational_roots.size(), 3u);
  for (const auto& z : cp.eigenvalues) EXPECT_LT(std::abs(z), 1e-9);
}

TEST(CharPoly, CayleyHamiltonExact) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + rng() % 4;
    Matrix m = random_integer_matrix(n, n, rng);
    CharPoly cp = char_poly_and_eigs(m);
    Matrix acc(n, n);
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
      acc = acc + power.scaled(cp.coefficients[k]);
      power = power * m;
    }
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(Linalg, DeterminantAndSolve) {
  Matrix m = rat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(determinant(m), Scalar(18));
  Vector b{Scalar(1), Scalar(2), Scalar(3)};
  auto x = solve(m, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(m.apply(*x), b);
  Matrix s = rat({{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(s, Vector{Scalar(1), Scalar(0)}));
}

TEST(Linalg, SymmetricInertia) {
  Matrix s = rat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  Inertia in = symmetric_inertia(s);
  EXPECT_EQ(in.plus, 1u);
  EXPECT_EQ(in.minus, 1u);
  EXPECT_EQ(in.zero, 1u);
  EXPECT_EQ(symmetric_inertia(s.to_mode(Mode::numeric)), in);
}

TEST(Linalg, SubspaceOperations) {
  Subspace s = Subspace::span(rat({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(Vector{Scalar(2), Scalar(3), Scalar(5)}));
  EXPECT_FALSE(s.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));
  Matrix ann = s.annihilator();
  ASSERT_EQ(ann.rows(), 1u);
  for (const auto& c : s.basis().columns()) EXPECT_TRUE(is_zero_vector(ann.apply(c)));
}

TEST(Polynomial, NormalFormModuloQuadric) {
  // x^2 + y^2 - z^2; x^2 reduces to z^2 - y^2 under grevlex with leading term x^2.
  Poly h(3);
  h.add_term({2, 0, 0}, 1);
  h.add_term({0, 2, 0}, 1);
  h.add_term({0, 0, 2}, -1);
  Poly x2 = Poly::monomial({2, 0, 0}, Scalar(1));
  Poly r = x2.normal_form(h);
  EXPECT_TRUE((x2 - r).normal_form(h).is_zero());
  EXPECT_TRUE((h * Poly::variable(3, 0)).normal_form(h).is_zero());
}

TEST(Polynomial, FieldBracketGrading) {
  // [iv dz, z dz] = iv dz.
  const std::size_t n = 3;
  PolyMap v = zero_map(n);
  v[1] = Poly::constant(n, Scalar(1));
  HolField iv{zero_map(n), v};
  HolField euler{identity_map(n), zero_map(n)};
  HolField b = bracket(iv, euler);
  EXPECT_TRUE(is_zero(b.re));
  EXPECT_TRUE(is_zero(b.im - v));
}

TEST(Series, OneParameterExponential) {
  // exp(t x dx) applied to 1 is e^t: coefficients 1/k!.
  SeriesRing ring(1, 6);
  Matrix a(2, 2);
  a.set(0, 0, 1);
  auto x = exp_orbit_series(ring, {a}, Vector{Scalar(1)});
  ASSERT_EQ(x.size(), 1u);
  Rational fact = 1;
  for (int k = 0; k <= 6; ++k) {
    if (k > 0) fact *= k;
    EXPECT_EQ(x[0][k], Rational(1) / fact) << "k = " << k;
  }
}
