#include "crtube/structure_constants.hpp"

#include <cmath>
#include <limits>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "lie_analysis";

Mode fields_mode(const std::vector<HolField>& fs) {
  for (const auto& f : fs)
    if (f.mode() == Mode::numeric) return Mode::numeric;
  return Mode::exact;
}
}  // namespace

StructureConstants::StructureConstants(std::size_t dim, std::vector<Scalar> table, double tol)
    : dim_(dim), tol_(tol), table_(std::move(table)) {
  if (table_.size() != dim_ * dim_ * dim_) throw InputError(kModule, "structure constant table has the wrong size");
  mode_ = common_mode(table_);
  if (mode_ == Mode::numeric)
    for (auto& x : table_) x = x.to_mode(Mode::numeric);
  double scale = 1.0;
  for (const auto& x : table_) scale = std::max(scale, std::abs(x.to_double()));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Scalar s = (*this)(i, j, k) + (*this)(j, i, k);
        if (!s.is_zero(tol_ * scale)) throw InconsistencyError(kModule, "structure constants are not antisymmetric");
      }
  const double jr = jacobi_residual();
  if (mode_ == Mode::exact ? jr != 0.0 : jr > tol_ * scale * scale)
    throw InconsistencyError(kModule, "Jacobi identity fails (residual " + std::to_string(jr) + ")");
}

std::optional<Vector> field_coordinates(const std::vector<HolField>& basis, const HolField& f, double tol) {
  FieldIndex index(basis);
  index.extend(f);
  Mode mode = fields_mode(basis) == Mode::exact && f.mode() == Mode::exact ? Mode::exact : Mode::numeric;
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(index.flatten(b, mode));
  Vector rhs = index.flatten(f, mode);
  if (mode == Mode::numeric) {
    double ref = 0.0;
    for (const auto& c : cols) ref = std::max(ref, norm2(c));
    if (norm2(rhs) <= tol * ref) return Vector(basis.size(), Scalar(0.0));
  }
  return solve(Matrix::from_columns(cols, index.size()), rhs, tol);
}

StructureConstants StructureConstants::from_fields(const std::vector<HolField>& basis, double tol) {
  const std::size_t m = basis.size();
  const Mode mode = fields_mode(basis);
  std::vector<HolField> brackets(m * m);
  FieldIndex index(basis);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      brackets[i * m + j] = crtube::bracket(basis[i], basis[j]);
      index.extend(brackets[i * m + j]);
    }
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(index.flatten(b, mode));
  Matrix a = Matrix::from_columns(cols, index.size());
  if (rank(a, tol) != m) throw InconsistencyError(kModule, "basis fields are linearly dependent");
  // Numeric brackets below tol * |e_i| |e_j| are treated as zero.
  std::vector<double> norms;
  for (const auto& c : cols) norms.push_back(norm2(c));
  std::vector<Scalar> table(m * m * m, mode == Mode::exact ? Scalar(0) : Scalar(0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector rhs = index.flatten(brackets[i * m + j], mode);
      if (mode == Mode::numeric && norm2(rhs) <= tol * norms[i] * norms[j]) continue;
      auto c = solve(a, rhs, tol);
      if (!c)
        throw InconsistencyError(kModule, "closure violation: bracket of basis fields " + std::to_string(i) + " and " +
                                              std::to_string(j) + " leaves the span");
      for (std::size_t k = 0; k < m; ++k) {
        table[(i * m + j) * m + k] = (*c)[k];
        table[(j * m + i) * m + k] = -(*c)[k];
      }
    }
  return StructureConstants(m, std::move(table), tol);
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_, mode_ == Mode::exact && common_mode(x) == Mode::exact && common_mode(y) == Mode::exact ? Scalar(0)
                                                                                                           : Scalar(0.0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(*this)(i, j, k).is_zero()) out[k] += f * (*this)(i, j, k);
    }
  }
  return out;
}

Matrix StructureConstants::ad(std::size_t i) const {
  Matrix m(dim_, dim_, mode_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.set(k, j, (*this)(i, j, k));
  return m;
}

Matrix StructureConstants::ad(const Vector& x) const {
  Matrix m(dim_, dim_, mode_ == Mode::exact && common_mode(x) == Mode::exact ? Mode::exact : Mode::numeric);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) m = m + ad(i).scaled(x[i]);
  return m;
}

double StructureConstants::jacobi_residual() const {
  double worst = 0.0;
  auto e = [&](std::size_t i) {
    Vector v(dim_, mode_ == Mode::exact ? Scalar(0) : Scalar(0.0));
    v[i] = Scalar(1);
    return v;
  };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vector x = e(i), y = e(j), z = e(k);
        Vector a = bracket(bracket(x, y), z), b = bracket(bracket(y, z), x), c = bracket(bracket(z, x), y);
        for (std::size_t t = 0; t < dim_; ++t) {
          Scalar s = a[t] + b[t] + c[t];
          double v = std::abs(s.to_double());
          if (s.is_exact() && !s.is_zero()) v = std::max(v, std::numeric_limits<double>::min());
          worst = std::max(worst, v);
        }
      }
  return worst;
}

}  // namespace crtube
