#include "crtube/presentation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "crtube/errors.hpp"

namespace crtube {

namespace {

constexpr const char* kModule = "presentations";

Vector zeros(std::size_t n, Mode mode) { return Vector(n, mode == Mode::exact ? Scalar(0) : Scalar(0.0)); }

double scale_of(const Vector& v) { return std::max(1.0, norm2(v)); }

bool near_zero(const Vector& v, double tol, double scale) {
  if (common_mode(v) == Mode::exact) return is_zero_vector(v);
  return norm2(v) <= tol * scale;
}

Vector to_numeric(const Vector& v) { return to_mode(v, Mode::numeric); }

}  // namespace

// ---------------------------------------------------------------------------
// AffineField

AffineField::AffineField(Matrix linear_part, Vector constant_part)
    : linear(std::move(linear_part)), constant(std::move(constant_part)) {
  if (!linear.is_square() || constant.size() != linear.rows())
    throw InputError(kModule, "affine field: linear part must be n x n and constant of length n");
}

AffineField::AffineField(Matrix linear_part) : linear(std::move(linear_part)) {
  if (!linear.is_square()) throw InputError(kModule, "affine field: linear part must be n x n");
  constant = zeros(linear.rows(), linear.mode());
}

Mode AffineField::mode() const {
  if (!linear.is_exact() || common_mode(constant) == Mode::numeric) return Mode::numeric;
  return Mode::exact;
}

Vector AffineField::eval(const Vector& x) const {
  Vector out = linear.apply(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += constant[i];
  return out;
}

Matrix AffineField::homogeneous() const {
  const std::size_t n = dim();
  Matrix h(n + 1, n + 1, mode());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.set(i, j, linear(i, j));
    h.set(i, n, constant[i]);
  }
  return h;
}

Vector AffineField::flatten() const {
  Vector out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out.push_back(linear(i, j));
  out.insert(out.end(), constant.begin(), constant.end());
  return out;
}

PolyMap AffineField::as_map() const {
  const std::size_t n = dim();
  PolyMap m = zero_map(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n, 0);
      e[j] = 1;
      m[i].add_term(e, linear(i, j));
    }
    m[i].add_term(Exponent(n, 0), constant[i]);
  }
  return m;
}

AffineField affine_bracket(const AffineField& x, const AffineField& y) {
  // X = A x + b, Y = C x + d: DY.X - DX.Y = (CA - AC) x + (C b - A d).
  Matrix lin = y.linear * x.linear - x.linear * y.linear;
  Vector cb = y.linear.apply(x.constant);
  Vector ad = x.linear.apply(y.constant);
  for (std::size_t i = 0; i < cb.size(); ++i) cb[i] -= ad[i];
  return AffineField(lin, cb);
}

// ---------------------------------------------------------------------------
// OrbitPresentation

OrbitPresentation::OrbitPresentation(std::vector<AffineField> generators, Vector base_point, double tol)
    : generators_(std::move(generators)), base_(std::move(base_point)) {
  if (generators_.empty()) throw InputError(kModule, "orbit presentation needs at least one generator");
  if (base_.empty()) throw InputError(kModule, "empty base point");
  for (const auto& g : generators_)
    if (g.dim() != n()) throw InputError(kModule, "generator dimension does not match the base point");
  Matrix flat = Matrix::from_columns([&] {
    std::vector<Vector> cols;
    for (const auto& g : generators_) cols.push_back(g.flatten());
    return cols;
  }());
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      Vector b = affine_bracket(generators_[i], generators_[j]).flatten();
      if (!solve(flat, b, tol))
        throw InputError(kModule, "generators are not closed under the bracket (pair " + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
    }
  orbit_dim_ = rank(evaluation(base_), tol);
  if (orbit_dim_ == 0) throw InputError(kModule, "all generators vanish at the base point");
}

bool OrbitPresentation::generators_exact() const {
  for (const auto& g : generators_)
    if (g.mode() == Mode::numeric) return false;
  return true;
}

Mode OrbitPresentation::mode() const {
  return generators_exact() && common_mode(base_) == Mode::exact ? Mode::exact : Mode::numeric;
}

Matrix OrbitPresentation::evaluation(const Vector& x) const {
  std::vector<Vector> cols;
  for (const auto& g : generators_) cols.push_back(g.eval(x));
  return Matrix::from_columns(cols, n());
}

std::vector<std::size_t> OrbitPresentation::independent_generators(const Vector& x, double tol) const {
  return independent_columns(evaluation(x), tol);
}

// ---------------------------------------------------------------------------
// LevelSetPresentation

LevelSetPresentation::LevelSetPresentation(Poly h, Vector base_point, double tol)
    : h_(std::move(h)), base_(std::move(base_point)) {
  if (h_.is_zero()) throw InputError(kModule, "level set polynomial is zero");
  if (h_.nvars() != base_.size()) throw InputError(kModule, "polynomial arity does not match the base point");
  if (!h_.is_homogeneous()) throw InputError(kModule, "level set polynomial must be homogeneous");
  if (h_.degree() < 1) throw InputError(kModule, "level set polynomial must have positive degree");
  for (std::size_t i = 0; i < n(); ++i) grad_.push_back(h_.derivative(i));
  if (!on_surface(base_, tol)) throw InputError(kModule, "base point is not on the level set");
  if (near_zero(gradient(base_), tol, 1.0)) throw InputError(kModule, "gradient vanishes at the base point");
}

Vector LevelSetPresentation::gradient(const Vector& x) const { return crtube::eval(grad_, x); }

Matrix LevelSetPresentation::hessian(const Vector& x) const {
  Mode mode = common_mode(x);
  Matrix hs(n(), n(), mode);
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) hs.set(i, j, grad_[i].derivative(j).eval(x));
  return hs;
}

bool LevelSetPresentation::on_surface(const Vector& x, double tol) const {
  if (x.size() != n()) return false;
  Scalar v = h_.eval(x);
  if (v.is_exact()) return v.is_zero();
  double scale = 0.0;
  const double r = norm2(x);
  for (const auto& [e, c] : h_.terms()) scale += std::abs(c.to_double());
  scale *= std::pow(std::max(1.0, r), h_.degree());
  return std::abs(v.to_double()) <= tol * std::max(1.0, scale);
}

// ---------------------------------------------------------------------------

std::size_t ambient_dim(const Presentation& p) {
  return std::visit([](const auto& q) { return q.n(); }, p);
}

const Vector& base_point(const Presentation& p) {
  return std::visit([](const auto& q) -> const Vector& { return q.base_point(); }, p);
}

std::string kind_name(const Presentation& p) {
  return std::holds_alternative<OrbitPresentation>(p) ? "orbit" : "levelset";
}

Subspace tangent_space(const Presentation& p, const Vector& a, double tol) {
  if (a.size() != ambient_dim(p)) throw InputError(kModule, "point has wrong dimension");
  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    Matrix ev = o->evaluation(a);
    std::size_t r = rank(ev, tol);
    if (r != o->orbit_dim())
      throw InconsistencyError(kModule, "generator evaluation has rank " + std::to_string(r) + " at the point, expected " +
                                            std::to_string(o->orbit_dim()) + " (orbit not locally homogeneous there)");
    return Subspace::span(ev, tol);
  }
  const auto& l = std::get<LevelSetPresentation>(p);
  if (!l.on_surface(a, tol)) throw InputError(kModule, "point is not on the level set");
  Vector g = l.gradient(a);
  if (near_zero(g, tol, 1.0)) throw InconsistencyError(kModule, "gradient vanishes at the point");
  return Subspace::span(nullspace(Matrix::from_rows({g}), tol), a.size(), tol);
}

// ---------------------------------------------------------------------------
// Second fundamental form

Vector SecondForm::value(std::size_t i, std::size_t j) const { return projection.apply(representatives[i][j]); }

Vector SecondForm::value(const Vector& v, const Vector& w) const {
  Mode mode = (projection.is_exact() && common_mode(v) == Mode::exact && common_mode(w) == Mode::exact)
                  ? Mode::exact
                  : Mode::numeric;
  Vector out = zeros(codim(), mode);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[i].is_zero() || w[j].is_zero()) continue;
      Vector val = value(i, j);
      for (std::size_t q = 0; q < codim(); ++q) out[q] += v[i] * w[j] * val[q];
    }
  return out;
}

Matrix SecondForm::stacked() const {
  Matrix s(codim() * dim(), dim(), projection.mode());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Vector val = value(i, j);
      for (std::size_t q = 0; q < codim(); ++q) s.set(q * dim() + i, j, val[q]);
    }
  return s;
}

SecondForm second_fundamental_form(const Presentation& p, const Vector& a, double tol) {
  SecondForm sf;
  sf.tol = tol;
  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    tangent_space(p, a, tol);
    auto idx = o->independent_generators(a, tol);
    if (idx.size() != o->orbit_dim()) throw InconsistencyError(kModule, "generator evaluations do not span T_aF");
    sf.frame = o->evaluation(a).select_columns(idx);
    sf.projection = Subspace::span(sf.frame, tol).annihilator();
    const std::size_t r = idx.size();
    sf.representatives.assign(r, std::vector<Vector>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        sf.representatives[i][j] = o->generators()[idx[j]].linear.apply(sf.frame.column(i));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        Vector d = sf.representatives[i][j];
        for (std::size_t k = 0; k < d.size(); ++k) d[k] -= sf.representatives[j][i][k];
        double sc = std::max(scale_of(sf.representatives[i][j]), scale_of(sf.representatives[j][i]));
        if (!near_zero(sf.projection.apply(d), tol, sc))
          throw InconsistencyError(kModule, "second fundamental form is not symmetric");
      }
    return sf;
  }
  const auto& l = std::get<LevelSetPresentation>(p);
  Subspace t = tangent_space(p, a, tol);
  sf.frame = t.basis();
  Vector g = l.gradient(a);
  Matrix hs = l.hessian(a);
  Scalar gg = dot(g, g);
  sf.projection = Matrix::from_rows({g}).scaled(Scalar(-1));
  const std::size_t r = sf.frame.cols();
  sf.representatives.assign(r, std::vector<Vector>(r));
  for (std::size_t i = 0; i < r; ++i) {
    Vector hw = hs.apply(sf.frame.column(i));
    for (std::size_t j = 0; j < r; ++j) {
      Scalar c = -dot(hw, sf.frame.column(j)) / gg;
      Vector rep;
      for (const auto& x : g) rep.push_back(c * x);
      sf.representatives[i][j] = rep;
    }
  }
  return sf;
}

// ---------------------------------------------------------------------------
// Levi form

std::vector<Complex> LeviForm::value(const std::vector<Complex>& v, const std::vector<Complex>& w) const {
  std::vector<Complex> out(form.codim(), 0.0);
  for (std::size_t i = 0; i < form.dim(); ++i)
    for (std::size_t j = 0; j < form.dim(); ++j) {
      Vector val = form.value(i, j);
      for (std::size_t q = 0; q < form.codim(); ++q) out[q] += v[i] * std::conj(w[j]) * val[q].to_double();
    }
  return out;
}

std::size_t LeviForm::complex_kernel_dim() const {
  Matrix s = form.stacked();
  Matrix zero(s.rows(), s.cols(), s.mode());
  Matrix real = vstack(hstack(s, zero), hstack(zero, s.scaled(Scalar(-1))));
  return nullspace(real, form.tol).size() / 2;
}

LeviForm levi_form(const Presentation& p, const Vector& a, double tol) {
  return LeviForm{second_fundamental_form(p, a, tol)};
}

// ---------------------------------------------------------------------------
// Sampling

std::vector<Vector> sample_points(const Presentation& p, std::size_t count, std::uint64_t seed, double tol) {
  std::vector<Vector> out;
  if (count == 0) return out;
  out.push_back(base_point(p));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  const std::size_t n = ambient_dim(p);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 50 * count + 50;

  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    std::vector<Eigen::MatrixXd> hom;
    for (const auto& g : o->generators()) {
      Matrix h = g.homogeneous();
      Eigen::MatrixXd e(n + 1, n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) e(i, j) = h(i, j).to_double();
      hom.push_back(e);
    }
    Eigen::VectorXd a(n + 1);
    for (std::size_t i = 0; i < n; ++i) a(i) = o->base_point()[i].to_double();
    a(n) = 1.0;
    while (out.size() < count && attempts++ < max_attempts) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, n + 1);
      for (const auto& h : hom) m += unit(rng) * h;
      Eigen::MatrixXd e = m.exp();
      Eigen::VectorXd x = e * a;
      Vector pt;
      for (std::size_t i = 0; i < n; ++i) pt.emplace_back(x(i));
      if (rank(o->evaluation(pt), tol) != o->orbit_dim()) continue;
      out.push_back(std::move(pt));
    }
  } else {
    const auto& l = std::get<LevelSetPresentation>(p);
    const Vector base = to_numeric(l.base_point());
    const double r = norm2(base);
    while (out.size() < count && attempts++ < max_attempts) {
      std::vector<double> x;
      for (std::size_t i = 0; i < n; ++i) x.push_back(base[i].to_double() + 0.4 * r * unit(rng));
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        Vector xv = from_doubles(x);
        double hv = l.poly().eval(x);
        Vector g = l.gradient(xv);
        double gg = 0.0;
        for (const auto& c : g) gg += c.to_double() * c.to_double();
        if (gg < 1e-24) break;
        if (std::abs(hv) <= 1e-15 * std::max(1.0, std::pow(norm2(xv), l.degree()))) {
          ok = true;
          break;
        }
        for (std::size_t i = 0; i < n; ++i) x[i] -= hv * g[i].to_double() / gg;
      }
      if (!ok) continue;
      Vector xv = from_doubles(x);
      double dist = 0.0;
      for (std::size_t i = 0; i < n; ++i) dist += std::pow(x[i] - base[i].to_double(), 2);
      if (std::sqrt(dist) > r) continue;
      if (!l.on_surface(xv, tol) || near_zero(l.gradient(xv), tol, 1.0)) continue;
      out.push_back(std::move(xv));
    }
  }
  if (out.size() < count) throw LimitError(kModule, "could not produce the requested number of sample points");
  return out;
}

bool is_conical(const Presentation& p, double tol, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = ambient_dim(p);
  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    Mode mode = o->generators_exact() ? Mode::exact : Mode::numeric;
    std::vector<Vector> cols;
    for (const auto& g : o->generators()) cols.push_back(g.flatten());
    AffineField euler(Matrix::identity(n, mode), zeros(n, mode));
    if (solve(Matrix::from_columns(cols), euler.flatten(), tol)) return true;
  }
  for (const auto& x : sample_points(p, samples, seed, tol)) {
    if (const auto* l = std::get_if<LevelSetPresentation>(&p)) {
      Scalar d = dot(l->gradient(x), x);
      double sc = norm2(l->gradient(x)) * norm2(x);
      if (d.is_exact() ? !d.is_zero() : std::abs(d.to_double()) > tol * std::max(1.0, sc)) return false;
    } else if (!tangent_space(p, x, tol).contains(x)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Minimality

std::string to_string(MinimalityVerdict v) {
  switch (v) {
    case MinimalityVerdict::minimal:
      return "minimal";
    case MinimalityVerdict::nonminimal:
      return "nonminimal";
    default:
      return "unknown";
  }
}

MinimalityReport minimality_report(const Presentation& p, const Vector& a, double tol) {
  MinimalityReport rep;
  const std::size_t n = ambient_dim(p);
  if (const auto* o = std::get_if<OrbitPresentation>(&p)) {
    Subspace w = Subspace::span(o->evaluation(a), tol);
    while (true) {
      std::vector<Vector> cols = w.basis().columns();
      for (const auto& g : o->generators())
        for (const auto& b : w.basis().columns()) cols.push_back(g.linear.apply(b));
      Subspace next = Subspace::span(cols, n, tol);
      if (next.dim() == w.dim()) break;
      w = next;
    }
    rep.hull_dim = w.dim();
    rep.not_in_hyperplane = w.dim() == n;
  } else {
    const auto& l = std::get<LevelSetPresentation>(p);
    rep.not_in_hyperplane = l.degree() >= 2;
    rep.hull_dim = rep.not_in_hyperplane ? n : n - 1;
  }
  SecondForm sf = second_fundamental_form(p, a, tol);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < sf.dim(); ++i)
    for (std::size_t j = i; j < sf.dim(); ++j) images.push_back(sf.value(i, j));
  std::size_t r = images.empty() ? 0 : rank(Matrix::from_columns(images, sf.codim()), tol);
  rep.levi_image_spans = sf.codim() > 0 && r == sf.codim();
  if (rep.levi_image_spans)
    rep.verdict = MinimalityVerdict::minimal;
  else if (!rep.not_in_hyperplane)
    rep.verdict = MinimalityVerdict::nonminimal;
  else
    rep.verdict = MinimalityVerdict::unknown;
  return rep;
}

}  // namespace crtube
