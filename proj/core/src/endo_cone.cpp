#include "crtube/endo_cone.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "endo_cones";

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_d(std::size_t n, int d) {
  if (n < 3 || d < 1 || static_cast<std::size_t>(d) > n - 2)
    throw InputError(kModule, "need n >= 3 and 1 <= d <= n - 2 (n = " + std::to_string(n) + ", d = " + std::to_string(d) + ")");
}
}  // namespace

EndoCone::EndoCone(Matrix phi, int d, Vector a) : phi_(std::move(phi)), d_(d), a_(std::move(a)) {
  if (!phi_.is_square() || phi_.rows() != a_.size()) throw InputError(kModule, "phi must be n x n and a of length n");
  check_d(a_.size(), d_);
}

std::vector<Matrix> EndoCone::powers() const {
  std::vector<Matrix> out{Matrix::identity(n(), phi_.mode())};
  for (int k = 1; k <= d_; ++k) out.push_back(out.back() * phi_);
  return out;
}

OrbitPresentation EndoCone::presentation() const {
  std::vector<AffineField> gens;
  for (auto& m : powers()) gens.emplace_back(std::move(m));
  return OrbitPresentation(std::move(gens), a_);
}

bool is_cyclic(const Matrix& phi, const Vector& a, double tol) {
  std::vector<Vector> cols{a};
  for (std::size_t k = 1; k < a.size(); ++k) cols.push_back(phi.apply(cols.back()));
  return rank(Matrix::from_columns(cols), tol) == a.size();
}

std::vector<std::vector<Complex>> delta_set(const std::vector<Complex>& eig, const std::vector<std::size_t>& I, int d) {
  std::vector<std::vector<Complex>> out;
  for (std::size_t k = 0; k < eig.size(); ++k)
    for (std::size_t j : I) {
      std::vector<Complex> v;
      for (int p = 1; p <= d; ++p) v.push_back(std::pow(eig[k], p) - std::pow(eig[j], p));
      out.push_back(std::move(v));
    }
  return out;
}

bool du_condition(const std::vector<Complex>& eig, int d, double tol) {
  check_d(eig.size(), d);
  double scale = 1.0;
  for (const auto& z : eig) scale = std::max(scale, std::abs(z));
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i + 1; j < eig.size(); ++j)
      if (std::abs(eig[i] - eig[j]) <= tol * scale)
        throw InputError(kModule, "eigenvalues are not pairwise distinct (not minimal)");
  const double pt_scale = std::pow(scale, d);
  auto same = [&](const std::vector<Complex>& u, const std::vector<Complex>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::abs(u[i] - v[i]) > tol * pt_scale) return false;
    return true;
  };
  auto is_origin = [&](const std::vector<Complex>& u) {
    return std::all_of(u.begin(), u.end(), [&](Complex z) { return std::abs(z) <= tol * pt_scale; });
  };
  std::vector<std::vector<Complex>> common;
  bool first = true;
  for_each_subset(eig.size(), static_cast<std::size_t>(d) + 1, [&](const std::vector<std::size_t>& I) {
    auto delta = delta_set(eig, I, d);
    if (first) {
      common = delta;
      first = false;
      return;
    }
    std::vector<std::vector<Complex>> keep;
    for (const auto& u : common)
      if (std::any_of(delta.begin(), delta.end(), [&](const auto& v) { return same(u, v); })) keep.push_back(u);
    common = std::move(keep);
  });
  return std::all_of(common.begin(), common.end(), is_origin);
}

bool du_condition(const std::vector<Rational>& eig, int d) {
  check_d(eig.size(), d);
  for (std::size_t i = 0; i < eig.size(); ++i)
    for (std::size_t j = i + 1; j < eig.size(); ++j)
      if (eig[i] == eig[j]) throw InputError(kModule, "eigenvalues are not pairwise distinct (not minimal)");
  using Point = std::vector<Rational>;
  auto delta = [&](const std::vector<std::size_t>& I) {
    std::vector<Point> out;
    for (std::size_t k = 0; k < eig.size(); ++k)
      for (std::size_t j : I) {
        Point v;
        Rational pk = 1, pj = 1;
        for (int p = 1; p <= d; ++p) {
          pk *= eig[k];
          pj *= eig[j];
          v.push_back(pk - pj);
        }
        out.push_back(std::move(v));
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  std::vector<Point> common;
  bool first = true;
  for_each_subset(eig.size(), static_cast<std::size_t>(d) + 1, [&](const std::vector<std::size_t>& I) {
    auto dl = delta(I);
    if (first) {
      common = dl;
      first = false;
      return;
    }
    std::vector<Point> keep;
    std::set_intersection(common.begin(), common.end(), dl.begin(), dl.end(), std::back_inserter(keep));
    common = std::move(keep);
  });
  return std::all_of(common.begin(), common.end(),
                     [](const Point& p) { return std::all_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) == 0; }); });
}

bool du_condition(const Matrix& phi, int d, double tol) {
  CharPoly cp = char_poly_and_eigs(phi);
  if (phi.is_exact() && cp.splits_over_rationals) return du_condition(cp.rational_roots, d);
  return du_condition(cp.eigenvalues, d, tol);
}

HolPrediction predicted_hol(const EndoCone& ec, double tol) {
  HolPrediction pred;
  if (!is_cyclic(ec.phi(), ec.a(), tol)) {
    pred.reason = "a is not a cyclic vector of phi";
    return pred;
  }
  try {
    if (!du_condition(ec.phi(), ec.d())) {
      pred.reason = "eigenvalue-difference condition fails";
      return pred;
    }
  } catch (const InputError&) {
    pred.reason = "repeated eigenvalues";
    return pred;
  }
  Presentation p = ec.presentation();
  if (minimality_report(p, ec.a(), tol).verdict != MinimalityVerdict::minimal) {
    pred.reason = "tube is not certified minimal";
    return pred;
  }
  pred.applicable = true;
  pred.dims = {ec.n(), static_cast<std::size_t>(ec.d()) + 1};
  pred.total = ec.n() + ec.d() + 1;
  pred.aut_trivial = true;
  return pred;
}

std::string to_string(EoVerdict v) {
  return v == EoVerdict::holds_infinitesimally ? "holds_infinitesimally" : "inconclusive";
}

EoResult eo_linearized(const EndoCone& ec, const std::vector<Matrix>& g0_basis, double tol) {
  EoResult res;
  if (!is_cyclic(ec.phi(), ec.a(), tol)) {
    res.note = "a is not cyclic for phi";
    return res;
  }
  const std::size_t n = ec.n();
  const std::size_t m = g0_basis.size();
  Mode mode = ec.phi().mode();
  for (const auto& b : g0_basis)
    if (!b.is_exact()) mode = Mode::numeric;
  if (common_mode(ec.a()) == Mode::numeric) mode = Mode::numeric;
  // Unknowns: X (row-major, n*n) then coefficients c (m).
  Matrix sys(n + n * n, n * n + m, mode);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.set(i, i * n + j, ec.a()[j]);
  // [X, phi]_{ij} = sum_k X_ik phi_kj - phi_ik X_kj.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = n + i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys.set(row, i * n + k, sys(row, i * n + k) + ec.phi()(k, j));
        sys.set(row, k * n + j, sys(row, k * n + j) - ec.phi()(i, k));
      }
      for (std::size_t c = 0; c < m; ++c) sys.set(row, n * n + c, -g0_basis[c](i, j));
    }
  auto sols = nullspace(sys, tol);
  std::vector<Vector> xs;
  for (const auto& s : sols) {
    Vector x(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n * n));
    if (!is_zero_vector(x, tol)) xs.push_back(x);
  }
  res.solution_dim = xs.empty() ? 0 : rank(Matrix::from_columns(xs), tol);
  bool all_commute = true;
  for (const auto& x : xs) {
    Matrix xm = Matrix::from_rows([&] {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < n; ++i)
        rows.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i * n), x.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      return rows;
    }());
    if (!commutator(xm, ec.phi()).is_zero(tol)) all_commute = false;
  }
  res.verdict = all_commute ? EoVerdict::holds_infinitesimally : EoVerdict::inconclusive;
  res.note = all_commute ? "every linearized stabilizer element commutes with phi"
                         : "a linearized stabilizer element does not commute with phi";
  return res;
}

int cr_dimension(const EndoCone& ec, double tol) {
  if (!is_cyclic(ec.phi(), ec.a(), tol)) throw RefusalError(kModule, "a is not a cyclic vector of phi");
  Presentation p = ec.presentation();
  if (minimality_report(p, ec.a(), tol).verdict != MinimalityVerdict::minimal)
    throw RefusalError(kModule, "tube is not certified minimal");
  const std::size_t t = tangent_space(p, ec.a(), tol).dim();
  if (t != static_cast<std::size_t>(ec.d()) + 1)
    throw InconsistencyError(kModule, "tangent dimension " + std::to_string(t) + " differs from d + 1");
  return ec.d() + 1;
}

}  // namespace crtube
