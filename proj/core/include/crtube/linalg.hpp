#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crtube/scalar.hpp"

namespace crtube {

/// Dense rectangular matrix of Scalars with a fixed mode. Writing a numeric
/// entry into an exact matrix throws; exact entries written into a numeric
/// matrix are converted.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Mode mode = Mode::exact);

  static Matrix identity(std::size_t n, Mode mode = Mode::exact);
  /// Mode is numeric as soon as one entry is numeric.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty = 0);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v);

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;

  Matrix transpose() const;
  Matrix to_mode(Mode m) const;
  Vector apply(const Vector& v) const;
  Matrix scaled(const Scalar& s) const;
  bool is_zero(double tol = 0.0) const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Row-major doubles, for handing to numeric libraries.
  std::vector<double> to_doubles() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Mode mode_ = Mode::exact;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& m);

/// Kernel basis. Exact mode: fraction-free (Bareiss) elimination, one basis
/// vector per free column with that coordinate set to 1 (the reduced-echelon
/// basis, so the result is canonical). Numeric mode: singular values at or
/// below tol * sigma_max are treated as zero (rows are equilibrated first).
std::vector<Vector> nullspace(const Matrix& m, double tol = kDefaultTol);

std::size_t rank(const Matrix& m, double tol = kDefaultTol);

/// Greedy left-to-right choice of linearly independent columns.
std::vector<std::size_t> independent_columns(const Matrix& m, double tol = kDefaultTol);

/// Some x with m x = b, or nullopt when the system is inconsistent (numeric
/// mode: least-squares residual above tol relative to |b| and |m|).
std::optional<Vector> solve(const Matrix& m, const Vector& b, double tol = kDefaultTol);

/// Exact determinant via Bareiss; numeric via LU.
Scalar determinant(const Matrix& m);

struct CharPoly {
  /// Ascending coefficients c_0 .. c_n of det(x I - m); c_n = 1.
  Vector coefficients;
  /// Roots with multiplicity, conjugate-closed, sorted by (re, im).
  std::vector<Complex> eigenvalues;
  /// Rational roots found exactly (exact mode only), with multiplicity.
  std::vector<Rational> rational_roots;
  /// True when every root is rational (exact mode only).
  bool splits_over_rationals = false;
};

/// Characteristic polynomial by Faddeev-LeVerrier plus Newton-polished roots.
CharPoly char_poly_and_eigs(const Matrix& m);

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric matrix: exact congruence reduction, or
/// eigenvalue signs with cut tol * max|eigenvalue| in numeric mode.
Inertia symmetric_inertia(const Matrix& s, double tol = kDefaultTol);

/// Linear subspace of an ambient R^n held as a column basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, Mode mode, double tol = kDefaultTol);

  /// Span of the columns (dependent columns dropped).
  static Subspace span(const Matrix& columns, double tol = kDefaultTol);
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient, double tol = kDefaultTol);
  static Subspace whole(std::size_t ambient, Mode mode, double tol = kDefaultTol);

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return ambient_; }
  Mode mode() const { return mode_; }
  double tol() const { return tol_; }
  const Matrix& basis() const { return basis_; }

  /// Rows spanning the annihilator (a (n - dim) x n matrix A with ker A = this).
  Matrix annihilator() const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool equals(const Subspace& other) const { return dim() == other.dim() && contains(other); }
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  Mode mode_ = Mode::exact;
  double tol_ = kDefaultTol;
  Matrix basis_;
};

}  // namespace crtube
