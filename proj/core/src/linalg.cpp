#include "crtube/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "crtube/errors.hpp"

namespace crtube {

namespace {

constexpr const char* kModule = "numeric_kernel";

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

Matrix from_eigen(const Eigen::MatrixXd& e) {
  Matrix out(e.rows(), e.cols(), Mode::numeric);
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) out.set(i, j, Scalar(e(i, j)));
  return out;
}

// ---------------------------------------------------------------------------
// Exact elimination
//
// Rows are scaled to primitive integer vectors and inserted one at a time into
// a row-echelon table keyed by pivot column. Elimination is fraction-free:
// v <- p * v - v_c * row, followed by removal of the integer content.

using IntRow = std::vector<Integer>;

void make_primitive(IntRow& v) {
  Integer g = 0;
  for (const auto& x : v)
    if (x != 0) {
      g = gcd(g, x);
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integerize(const Matrix& m, std::size_t i) {
  Integer l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& d = m(i, j).rational().get_den();
    if (d != 1) l = lcm(l, d);
  }
  IntRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rational& q = m(i, j).rational();
    if (sgn(q) != 0) row[j] = q.get_num() * (l / q.get_den());
  }
  make_primitive(row);
  return row;
}

class IntEchelon {
 public:
  explicit IntEchelon(std::size_t cols) : cols_(cols) {}

  void insert(IntRow v) {
    for (auto& [c, row] : rows_) {
      if (v[c] == 0) continue;
      Integer g = gcd(row[c], v[c]);
      Integer a = row[c] / g;
      Integer b = v[c] / g;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] == 0 && v[j] == 0) continue;
        v[j] = a * v[j] - b * row[j];
      }
      make_primitive(v);
    }
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        rows_.emplace(c, std::move(v));
        return;
      }
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [c, row] : rows_) p.push_back(c);
    return p;
  }

  // Basis vector for free column f: x_f = 1, other free columns 0.
  std::vector<Rational> kernel_vector(std::size_t f) const {
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const auto& [c, row] = *it;
      Rational s = 0;
      for (std::size_t j = c + 1; j < cols_; ++j)
        if (row[j] != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
      x[c] = -s / Rational(row[c]);
    }
    return x;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, IntRow> rows_;
};

IntEchelon echelon_exact(const Matrix& m) {
  IntEchelon e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = integerize(m, i);
    bool nz = std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; });
    if (nz) e.insert(std::move(r));
  }
  return e;
}

// ---------------------------------------------------------------------------
// Numeric helpers

Eigen::MatrixXd equilibrated(const Matrix& m) {
  Eigen::MatrixXd a = to_eigen(m);
  if (a.size() == 0) return a;
  // Rows at round-off level relative to the whole matrix are noise; scaling
  // them up would invent rank.
  const double global = a.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double s = a.row(i).cwiseAbs().maxCoeff();
    if (s <= 1e-12 * global)
      a.row(i).setZero();
    else
      a.row(i) /= s;
  }
  return a;
}

struct NumericSvd {
  Eigen::MatrixXd u, v;
  Eigen::VectorXd sigma;
};

NumericSvd svd_full(const Eigen::MatrixXd& a) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.matrixV(), svd.singularValues()};
}

std::size_t numeric_rank(const Eigen::MatrixXd& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex polish_root(const std::vector<Complex>& c, Complex z) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  for (int it = 0; it < 30; ++it) {
    Complex p = horner(c, z);
    Complex dp = horner(d, z);
    if (std::abs(dp) < 1e-300) break;
    Complex next = z - p / dp;
    if (std::abs(horner(c, next)) >= std::abs(p)) break;
    z = next;
  }
  return z;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& monic) {
  const std::size_t d = monic.size() - 1;
  if (d == 0) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < d; ++i) comp(i, d - 1) = -monic[i].real();
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(polish_root(monic, es.eigenvalues()(i)));
  return roots;
}

std::vector<Complex> conjugate_close(std::vector<Complex> roots) {
  double scale = 1.0;
  for (const auto& z : roots) scale = std::max(scale, std::abs(z));
  const double eps = 1e-9 * scale;
  std::vector<Complex> real, upper, lower;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) <= eps)
      real.emplace_back(z.real(), 0.0);
    else if (z.imag() > 0)
      upper.push_back(z);
    else
      lower.push_back(z);
  }
  std::vector<Complex> out = real;
  if (upper.size() == lower.size()) {
    for (const auto& z : upper) {
      auto best = std::min_element(lower.begin(), lower.end(),
                                   [&](Complex a, Complex b) { return std::abs(a - std::conj(z)) < std::abs(b - std::conj(z)); });
      Complex avg = 0.5 * (z + std::conj(*best));
      lower.erase(best);
      out.push_back(avg);
      out.push_back(std::conj(avg));
    }
  } else {
    out.insert(out.end(), upper.begin(), upper.end());
    out.insert(out.end(), lower.begin(), lower.end());
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

Rational eval_exact(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divides by (x - r); assumes r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  const std::size_t n = c.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = c[i + 1] + carry * r;
    q[i] = carry;
  }
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, mode == Mode::exact ? Scalar(0) : Scalar(0.0)) {}

Matrix Matrix::identity(std::size_t n, Mode mode) {
  Matrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Mode mode = Mode::exact;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InconsistencyError(kModule, "from_rows: ragged rows");
    if (common_mode(r) == Mode::numeric) mode = Mode::numeric;
  }
  Matrix m(rows.size(), cols, mode);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows_if_empty) {
  return from_rows(cols, rows_if_empty).transpose();
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (mode_ == Mode::exact && !v.is_exact())
    throw InconsistencyError(kModule, "numeric value written into an exact matrix");
  data_[i * cols_ + j] = v.to_mode(mode_);
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix out(rows_, idx.size(), mode_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out.set(i, k, (*this)(i, idx[k]));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, mode_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
  return t;
}

Matrix Matrix::to_mode(Mode m) const {
  Matrix out(rows_, cols_, m);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].to_mode(m);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InconsistencyError(kModule, "apply: size mismatch");
  Vector out(rows_, mode_ == Mode::exact ? Scalar(0) : Scalar(0.0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  if (!s.is_exact()) out = out.to_mode(Mode::numeric);
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::is_zero(double tol) const {
  return std::all_of(data_.begin(), data_.end(), [&](const Scalar& x) { return x.is_zero(tol); });
}

std::vector<double> Matrix::to_doubles() const { return crtube::to_doubles(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InconsistencyError(kModule, "matrix product: shape mismatch");
  Mode mode = (a.mode_ == Mode::exact && b.mode_ == Mode::exact) ? Mode::exact : Mode::numeric;
  Matrix out(a.rows_, b.cols_, mode);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out.data_[i * b.cols_ + j] += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InconsistencyError(kModule, "matrix sum: shape mismatch");
  Mode mode = (a.mode_ == Mode::exact && b.mode_ == Mode::exact) ? Mode::exact : Mode::numeric;
  Matrix out = a.to_mode(mode);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(Scalar(-1)); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InconsistencyError(kModule, "hstack: row mismatch");
  Mode mode = (a.is_exact() && b.is_exact()) ? Mode::exact : Mode::numeric;
  Matrix out(a.rows(), a.cols() + b.cols(), mode);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b(i, j));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) { return hstack(a.transpose(), b.transpose()).transpose(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar trace(const Matrix& m) {
  Scalar s = m.is_exact() ? Scalar(0) : Scalar(0.0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
  return s;
}

// ---------------------------------------------------------------------------
// Kernels, rank, solving

std::vector<Vector> nullspace(const Matrix& m, double tol) {
  std::vector<Vector> basis;
  if (m.is_exact()) {
    IntEchelon e = echelon_exact(m);
    auto piv = e.pivots();
    for (std::size_t f = 0; f < m.cols(); ++f) {
      if (std::binary_search(piv.begin(), piv.end(), f)) continue;
      auto x = e.kernel_vector(f);
      Vector v;
      v.reserve(x.size());
      for (auto& q : x) v.emplace_back(std::move(q));
      basis.push_back(std::move(v));
    }
    return basis;
  }
  if (tol <= 0) throw InputError(kModule, "numeric nullspace needs tol > 0");
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vector v(m.cols(), Scalar(0.0));
      v[j] = Scalar(1.0);
      basis.push_back(v);
    }
    return basis;
  }
  auto svd = svd_full(equilibrated(m));
  const auto& s = svd.sigma;
  const double smax = s.size() > 0 ? s(0) : 0.0;
  for (Eigen::Index j = 0; j < svd.v.cols(); ++j) {
    bool null = j >= s.size() || smax == 0.0 || s(j) <= tol * smax;
    if (!null) continue;
    Vector v;
    for (Eigen::Index i = 0; i < svd.v.rows(); ++i) v.emplace_back(svd.v(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m, double tol) {
  if (m.is_exact()) return echelon_exact(m).rank();
  return numeric_rank(equilibrated(m), tol);
}

std::vector<std::size_t> independent_columns(const Matrix& m, double tol) {
  if (m.is_exact()) return echelon_exact(m).pivots();
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto trial = chosen;
    trial.push_back(j);
    Eigen::MatrixXd sub = to_eigen(m.select_columns(trial));
    // Normalize columns so the cut is scale free.
    for (Eigen::Index c = 0; c < sub.cols(); ++c) {
      double nrm = sub.col(c).norm();
      if (nrm > 0) sub.col(c) /= nrm;
    }
    if (numeric_rank(sub, tol) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, double tol) {
  if (b.size() != m.rows()) throw InconsistencyError(kModule, "solve: size mismatch");
  if (m.is_exact() && common_mode(b) == Mode::exact) {
    Matrix aug = hstack(m, Matrix::from_columns({b}, m.rows()));
    IntEchelon e = echelon_exact(aug);
    auto piv = e.pivots();
    if (std::binary_search(piv.begin(), piv.end(), m.cols())) return std::nullopt;
    auto x = e.kernel_vector(m.cols());
    Vector out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.emplace_back(Rational(-x[j]));
    return out;
  }
  Eigen::MatrixXd a = to_eigen(m);
  Eigen::VectorXd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i].to_double();
  if (m.cols() == 0) {
    if (rhs.norm() <= tol * std::max(1.0, rhs.norm())) return Vector{};
    return std::nullopt;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  cod.setThreshold(tol);
  Eigen::VectorXd x = cod.solve(rhs);
  double resid = (a * x - rhs).norm();
  double scale = a.norm() * x.norm() + rhs.norm();
  if (resid > tol * std::max(scale, 1e-300) && resid > 1e-300) return std::nullopt;
  Vector out;
  for (Eigen::Index i = 0; i < x.size(); ++i) out.emplace_back(x(i));
  return out;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InconsistencyError(kModule, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (!m.is_exact()) return Scalar(to_eigen(m).determinant());
  // Bareiss on the integerized matrix; track row scalings.
  std::vector<IntRow> a(n, IntRow(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).rational().get_den());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).rational().get_num() * (l / m(i, j).rational().get_den());
    scale /= Rational(l);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Scalar(Rational(sign * a[n - 1][n - 1]) * scale);
}

CharPoly char_poly_and_eigs(const Matrix& m) {
  if (!m.is_square()) throw InconsistencyError(kModule, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const Mode mode = m.mode();
  CharPoly out;
  out.coefficients.assign(n + 1, mode == Mode::exact ? Scalar(0) : Scalar(0.0));
  out.coefficients[n] = Scalar(1).to_mode(mode);
  Matrix acc(n, n, mode);
  const Matrix id = Matrix::identity(n, mode);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + id.scaled(out.coefficients[n - k + 1]);
    out.coefficients[n - k] = -trace(m * acc) / Scalar(static_cast<long>(k));
  }

  std::vector<Complex> roots;
  if (mode == Mode::exact) {
    std::vector<Rational> c;
    for (const auto& s : out.coefficients) c.push_back(s.rational());
    while (c.size() > 1 && sgn(c.front()) == 0) {
      out.rational_roots.emplace_back(0);
      c.erase(c.begin());
    }
    Integer l = 1;
    for (const auto& q : c) l = lcm(l, q.get_den());
    std::vector<Integer> ic;
    for (const auto& q : c) ic.push_back(q.get_num() * (l / q.get_den()));
    const Integer limit("1000000000000");
    if (c.size() > 1 && abs(ic.front()) <= limit && abs(ic.back()) <= limit) {
      auto num_div = divisors(ic.front());
      auto den_div = divisors(ic.back());
      std::vector<Rational> candidates;
      for (const auto& p : num_div)
        for (const auto& q : den_div) {
          Rational r(p, q);
          r.canonicalize();
          candidates.push_back(r);
          candidates.push_back(-r);
        }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const auto& r : candidates)
        while (c.size() > 1 && sgn(eval_exact(c, r)) == 0) {
          out.rational_roots.push_back(r);
          c = deflate(c, r);
        }
    }
    std::sort(out.rational_roots.begin(), out.rational_roots.end());
    out.splits_over_rationals = c.size() == 1;
    for (const auto& r : out.rational_roots) roots.emplace_back(r.get_d(), 0.0);
    if (c.size() > 1) {
      std::vector<Complex> monic;
      for (const auto& q : c) monic.emplace_back(Rational(q / c.back()).get_d(), 0.0);
      auto rest = companion_roots(monic);
      roots.insert(roots.end(), rest.begin(), rest.end());
    }
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
    std::vector<Complex> poly;
    for (const auto& s : out.coefficients) poly.emplace_back(s.to_double(), 0.0);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) roots.push_back(polish_root(poly, es.eigenvalues()(i)));
  }
  out.eigenvalues = conjugate_close(std::move(roots));
  return out;
}

Inertia symmetric_inertia(const Matrix& s, double tol) {
  if (!s.is_square()) throw InconsistencyError(kModule, "inertia of a non-square matrix");
  const std::size_t n = s.rows();
  Inertia out;
  if (!s.is_exact()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(s));
    const auto& ev = es.eigenvalues();
    double mx = n > 0 ? ev.cwiseAbs().maxCoeff() : 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (std::abs(ev(i)) <= tol * mx || mx == 0.0)
        ++out.zero;
      else if (ev(i) > 0)
        ++out.plus;
      else
        ++out.minus;
    }
    return out;
  }
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s(i, j).rational();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (active[i] && sgn(a[i][i]) != 0) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (active[i] && active[j] && i != j && sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) {
        out.zero += remaining;
        break;
      }
      // Congruence by e_i -> e_i + e_j makes the (i, i) entry 2 a_ij != 0.
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    const Rational d = a[piv][piv];
    (sgn(d) > 0 ? out.plus : out.minus) += 1;
    active[piv] = false;
    --remaining;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || sgn(a[i][piv]) == 0) continue;
      Rational f = a[i][piv] / d;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j]) a[i][j] -= f * a[piv][j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient, Mode mode, double tol)
    : ambient_(ambient), mode_(mode), tol_(tol), basis_(ambient, 0, mode) {}

Subspace Subspace::span(const Matrix& columns, double tol) {
  Subspace s(columns.rows(), columns.mode(), tol);
  if (columns.cols() == 0) return s;
  if (columns.is_exact()) {
    s.basis_ = columns.select_columns(independent_columns(columns));
    return s;
  }
  Eigen::MatrixXd a = to_eigen(columns);
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    double nrm = a.col(c).norm();
    if (nrm > 0) a.col(c) /= nrm;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(0) > 0 && sv(r) > tol * sv(0)) ++r;
  s.basis_ = from_eigen(svd.matrixU().leftCols(r));
  return s;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient, double tol) {
  return span(Matrix::from_columns(vectors, ambient), tol);
}

Subspace Subspace::whole(std::size_t ambient, Mode mode, double tol) {
  return span(Matrix::identity(ambient, mode), tol);
}

Matrix Subspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(ambient_, mode_);
  auto rows = nullspace(basis_.transpose(), tol_);
  return Matrix::from_rows(rows, ambient_);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InconsistencyError(kModule, "subspace membership: size mismatch");
  if (mode_ == Mode::exact && common_mode(v) == Mode::exact) return solve(basis_, v).has_value();
  double nv = norm2(v);
  if (nv == 0.0) return true;
  if (dim() == 0) return false;
  Eigen::MatrixXd b = to_eigen(basis_);
  Eigen::VectorXd x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x(i) = v[i].to_double();
  Eigen::VectorXd coeff = b.completeOrthogonalDecomposition().solve(x);
  return (b * coeff - x).norm() <= std::sqrt(tol_) * 1e-2 * nv;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& c : other.basis_.columns())
    if (!contains(c)) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const { return solve(basis_, v, tol_); }

}  // namespace crtube
