#include "crtube/hol_solver.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "crtube/errors.hpp"
#include "crtube/series.hpp"

namespace crtube {

namespace {

constexpr const char* kModule = "hol_solver";

/// Unknown layout for degree k: coefficient of x^alpha in component p.
struct Layout {
  std::size_t n;
  int k;
  std::vector<Exponent> monos;

  Layout(std::size_t n_, int k_) : n(n_), k(k_), monos(monomials_of_degree(n_, k_ + 1)) {}
  std::size_t unknowns() const { return n * monos.size(); }
  std::size_t col(std::size_t p, std::size_t a) const { return p * monos.size() + a; }
};

/// Multi-indices beta of the conditions: |beta| = j with j = k mod 2, j <= k + 1.
std::vector<Exponent> condition_betas(std::size_t n, int k) {
  std::vector<Exponent> out;
  for (int j = (k % 2 == 0 ? 0 : 1); j <= k + 1; j += 2)
    for (auto& b : monomials_of_degree(n, j)) out.push_back(std::move(b));
  return out;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

/// alpha! / (alpha - beta)!
Integer falling(const Exponent& alpha, const Exponent& beta) {
  Integer f = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int t = 0; t < beta[i]; ++t) f *= alpha[i] - t;
  return f;
}

double monomial_value(const Exponent& e, const std::vector<double>& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) v *= std::pow(x[i], e[i]);
  return v;
}

/// Orthonormal covectors spanning the annihilator of T_xF at a numeric point.
std::vector<std::vector<double>> normals_at(const Presentation& p, const Vector& x, double tol) {
  std::vector<std::vector<double>> out;
  if (const auto* l = std::get_if<LevelSetPresentation>(&p)) {
    auto g = to_doubles(l->gradient(to_mode(x, Mode::numeric)));
    double nrm = 0.0;
    for (double v : g) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : g) v /= nrm;
    out.push_back(g);
    return out;
  }
  Subspace t = tangent_space(p, to_mode(x, Mode::numeric), tol);
  Matrix ann = t.annihilator();
  for (std::size_t i = 0; i < ann.rows(); ++i) out.push_back(to_doubles(ann.row(i)));
  return out;
}

Series series_scaled(const Series& s, const Rational& c) {
  Series out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (sgn(s[i]) != 0) out[i] = s[i] * c;
  return out;
}

Series series_det(const SeriesRing& ring, const std::vector<std::vector<const Series*>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return *m[0][0];
  Series acc = series_zero(ring);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<const Series*>> minor;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    Series term = series_mul(ring, *m[i][0], series_det(ring, minor));
    series_axpy(acc, i % 2 == 0 ? Rational(1) : Rational(-1), term);
  }
  return acc;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
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

Matrix rows_to_matrix(const std::vector<std::map<std::size_t, Scalar>>& rows, std::size_t cols, Mode mode) {
  Matrix m(rows.size(), cols, mode);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m.set(i, c, v);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Backend b) {
  switch (b) {
    case Backend::exact_levelset:
      return "exact-levelset";
    case Backend::exact_jet:
      return "exact-jet";
    case Backend::numeric:
      return "numeric";
    default:
      return "auto";
  }
}

Backend parse_backend(const std::string& s) {
  if (s == "auto") return Backend::automatic;
  if (s == "exact-levelset" || s == "exact_levelset") return Backend::exact_levelset;
  if (s == "exact-jet" || s == "exact_jet") return Backend::exact_jet;
  if (s == "numeric") return Backend::numeric;
  throw InputError(kModule, "unknown backend '" + s + "'");
}

PolyField::PolyField(int degree, PolyMap q) : degree_(degree), q_(std::move(q)) {
  if (degree_ < -1) throw InputError(kModule, "field degree must be >= -1");
  for (const auto& c : q_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || c.degree() != degree_ + 1)
      throw InputError(kModule, "field component is not homogeneous of degree " + std::to_string(degree_ + 1));
  }
}

Mode PolyField::mode() const {
  for (const auto& c : q_)
    if (c.mode() == Mode::numeric) return Mode::numeric;
  return Mode::exact;
}

HolField PolyField::to_hol() const {
  if (i_real()) return HolField{zero_map(n()), q_};
  return HolField{q_, zero_map(n())};
}

Matrix linear_part(const PolyField& f) {
  if (f.degree() != 0) throw InputError(kModule, "linear part requested for a field of degree " + std::to_string(f.degree()));
  const std::size_t n = f.n();
  Matrix m(n, n, f.mode());
  for (std::size_t p = 0; p < n; ++p)
    for (const auto& [e, c] : f.map()[p].terms())
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] == 1) m.set(p, j, c);
  return m;
}

Backend resolve_backend(const Presentation& p, Backend requested) {
  const bool level = std::holds_alternative<LevelSetPresentation>(p);
  const OrbitPresentation* o = std::get_if<OrbitPresentation>(&p);
  const bool rational_orbit = o && o->mode() == Mode::exact;
  switch (requested) {
    case Backend::automatic:
      if (level) return Backend::exact_levelset;
      return rational_orbit ? Backend::exact_jet : Backend::numeric;
    case Backend::exact_levelset:
      if (!level) throw RefusalError(kModule, "exact-levelset backend needs a level set presentation");
      if (std::get<LevelSetPresentation>(p).poly().mode() != Mode::exact)
        throw RefusalError(kModule, "exact-levelset backend needs rational polynomial coefficients");
      return requested;
    case Backend::exact_jet:
      if (!rational_orbit) throw RefusalError(kModule, "exact-jet backend needs an orbit with rational generators and base point");
      return requested;
    default:
      return Backend::numeric;
  }
}

std::size_t unknown_count(std::size_t n, int k) { return k < -1 ? 0 : Layout(n, k).unknowns(); }

// ---------------------------------------------------------------------------
// Condition systems

Matrix levelset_system(const LevelSetPresentation& p, int k) {
  const std::size_t n = p.n();
  Layout lay(n, k);
  std::vector<Poly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(p.poly().derivative(i));
  std::map<std::pair<std::size_t, Exponent>, Poly> nf_cache;
  auto nf = [&](std::size_t comp, const Exponent& g) -> const Poly& {
    auto key = std::make_pair(comp, g);
    auto it = nf_cache.find(key);
    if (it != nf_cache.end()) return it->second;
    Poly prod = grad[comp] * Poly::monomial(g, Scalar(1));
    return nf_cache.emplace(key, prod.normal_form(p.poly())).first->second;
  };
  std::vector<std::map<std::size_t, Scalar>> rows;
  for (const auto& beta : condition_betas(n, k)) {
    std::map<Exponent, std::size_t, GrevlexLess> row_of;
    for (std::size_t comp = 0; comp < n; ++comp)
      for (std::size_t a = 0; a < lay.monos.size(); ++a) {
        const Exponent& alpha = lay.monos[a];
        if (!divides(beta, alpha)) continue;
        const Scalar fac = Scalar(Rational(falling(alpha, beta)));
        for (const auto& [e, c] : nf(comp, minus(alpha, beta)).terms()) {
          auto it = row_of.find(e);
          if (it == row_of.end()) {
            it = row_of.emplace(e, rows.size()).first;
            rows.emplace_back();
          }
          auto& cell = rows[it->second][lay.col(comp, a)];
          cell += fac * c;
        }
      }
  }
  return rows_to_matrix(rows, lay.unknowns(), p.poly().mode());
}

Matrix numeric_system(const Presentation& p, int k, const std::vector<Vector>& points, double tol) {
  const std::size_t n = ambient_dim(p);
  Layout lay(n, k);
  const auto betas = condition_betas(n, k);
  std::vector<std::vector<double>> rows;
  for (const auto& xv : points) {
    const auto x = to_doubles(xv);
    for (const auto& nu : normals_at(p, xv, tol))
      for (const auto& beta : betas) {
        std::vector<double> row(lay.unknowns(), 0.0);
        for (std::size_t comp = 0; comp < n; ++comp) {
          if (nu[comp] == 0.0) continue;
          for (std::size_t a = 0; a < lay.monos.size(); ++a) {
            const Exponent& alpha = lay.monos[a];
            if (!divides(beta, alpha)) continue;
            row[lay.col(comp, a)] = nu[comp] * falling(alpha, beta).get_d() * monomial_value(minus(alpha, beta), x);
          }
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix m(rows.size(), lay.unknowns(), Mode::numeric);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < lay.unknowns(); ++j) m.set(i, j, Scalar(rows[i][j]));
  return m;
}

Matrix jet_system(const OrbitPresentation& p, int k, int order) {
  if (p.mode() != Mode::exact) throw RefusalError(kModule, "jet system needs rational generators and base point");
  const std::size_t n = p.n();
  Layout lay(n, k);
  const auto indep = p.independent_generators(p.base_point());
  const std::size_t r = indep.size();
  if (r >= n) return Matrix(0, lay.unknowns());
  SeriesRing ring(r, order);
  std::vector<Matrix> hom;
  for (std::size_t g : indep) hom.push_back(p.generators()[g].homogeneous());
  const std::vector<Series> x = exp_orbit_series(ring, hom, p.base_point());

  // Frame columns g_i(x(t)).
  std::vector<std::vector<Series>> frame(r, std::vector<Series>(n, series_zero(ring)));
  for (std::size_t c = 0; c < r; ++c) {
    const AffineField& g = p.generators()[indep[c]];
    for (std::size_t i = 0; i < n; ++i) {
      frame[c][i][0] = g.constant[i].rational();
      for (std::size_t j = 0; j < n; ++j)
        if (!g.linear(i, j).is_zero()) series_axpy(frame[c][i], g.linear(i, j).rational(), x[j]);
    }
  }

  std::map<Exponent, Series> powers;
  std::function<const Series&(const Exponent&)> power = [&](const Exponent& g) -> const Series& {
    auto it = powers.find(g);
    if (it != powers.end()) return it->second;
    Series s;
    std::size_t i = 0;
    while (i < n && g[i] == 0) ++i;
    if (i == n) {
      s = series_constant(ring, 1);
    } else {
      Exponent h = g;
      h[i] -= 1;
      s = series_mul(ring, power(h), x[i]);
    }
    return powers.emplace(g, std::move(s)).first->second;
  };

  const auto betas = condition_betas(n, k);
  std::vector<std::map<std::size_t, Scalar>> rows;
  for_each_subset(n, r + 1, [&](const std::vector<std::size_t>& rsub) {
    // Covector nu_p = (-1)^(pos + r) det(frame restricted to rsub \ {p}).
    std::vector<Series> nu;
    for (std::size_t pos = 0; pos <= r; ++pos) {
      std::vector<std::vector<const Series*>> minor;
      for (std::size_t q = 0; q <= r; ++q) {
        if (q == pos) continue;
        std::vector<const Series*> row;
        for (std::size_t c = 0; c < r; ++c) row.push_back(&frame[c][rsub[q]]);
        minor.push_back(std::move(row));
      }
      Series d = series_det(ring, minor);
      nu.push_back((pos + r) % 2 == 0 ? d : series_scaled(d, -1));
    }
    std::map<std::pair<std::size_t, Exponent>, Series> prod;
    for (const auto& beta : betas) {
      const std::size_t base_row = rows.size();
      rows.resize(rows.size() + ring.size());
      for (std::size_t pos = 0; pos <= r; ++pos) {
        const std::size_t comp = rsub[pos];
        for (std::size_t a = 0; a < lay.monos.size(); ++a) {
          const Exponent& alpha = lay.monos[a];
          if (!divides(beta, alpha)) continue;
          const Exponent gamma = minus(alpha, beta);
          auto key = std::make_pair(pos, gamma);
          auto it = prod.find(key);
          if (it == prod.end()) it = prod.emplace(key, series_mul(ring, nu[pos], power(gamma))).first;
          const Rational fac(falling(alpha, beta));
          const Series& s = it->second;
          for (std::size_t mu = 0; mu < s.size(); ++mu)
            if (sgn(s[mu]) != 0) rows[base_row + mu][lay.col(comp, a)] += Scalar(Rational(fac * s[mu]));
        }
      }
    }
  });
  std::vector<std::map<std::size_t, Scalar>> nonzero;
  for (auto& row : rows)
    if (!row.empty()) nonzero.push_back(std::move(row));
  return rows_to_matrix(nonzero, lay.unknowns(), Mode::exact);
}

std::vector<PolyField> fields_from_kernel(std::size_t n, int k, const std::vector<Vector>& kernel) {
  Layout lay(n, k);
  std::vector<PolyField> out;
  for (const auto& v : kernel) {
    PolyMap q = zero_map(n);
    for (std::size_t comp = 0; comp < n; ++comp)
      for (std::size_t a = 0; a < lay.monos.size(); ++a) q[comp].add_term(lay.monos[a], v[lay.col(comp, a)]);
    out.emplace_back(k, std::move(q));
  }
  return out;
}

double tangency_residual(const Presentation& p, const PolyField& f, const Vector& xv, double tol) {
  const std::size_t n = ambient_dim(p);
  if (f.degree() < 0) return 0.0;
  const auto x = to_doubles(xv);
  const auto normals = normals_at(p, xv, tol);
  double worst = 0.0;
  for (const auto& beta : condition_betas(n, f.degree())) {
    std::vector<double> v(n, 0.0);
    double mag = 0.0;
    for (std::size_t comp = 0; comp < n; ++comp)
      for (const auto& [alpha, c] : f.map()[comp].terms()) {
        if (!divides(beta, alpha)) continue;
        double t = c.to_double() * falling(alpha, beta).get_d() * monomial_value(minus(alpha, beta), x);
        v[comp] += t;
        mag += std::abs(t);
      }
    if (mag == 0.0) continue;
    for (const auto& nu : normals) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += nu[i] * v[i];
      worst = std::max(worst, std::abs(s) / mag);
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Solving one degree

ComponentResult solve_component(const Presentation& p, int k, const SolveOptions& opt) {
  ComponentResult res;
  res.degree = k;
  res.backend = resolve_backend(p, opt.backend);
  const std::size_t n = ambient_dim(p);
  if (k < -1) throw InputError(kModule, "degree must be >= -1");
  if (k == -1) {
    for (std::size_t i = 0; i < n; ++i) {
      PolyMap q = zero_map(n);
      q[i] = Poly::constant(n, Scalar(1));
      res.basis.emplace_back(-1, std::move(q));
    }
    return res;
  }
  res.unknowns = unknown_count(n, k);
  switch (res.backend) {
    case Backend::exact_levelset: {
      Matrix sys = levelset_system(std::get<LevelSetPresentation>(p), k);
      res.rows = sys.rows();
      res.basis = fields_from_kernel(n, k, nullspace(sys));
      return res;
    }
    case Backend::numeric: {
      const std::size_t betas = condition_betas(n, k).size();
      const std::size_t codim = n - tangent_space(p, to_mode(base_point(p), Mode::numeric), opt.tol).dim();
      const std::size_t per_point = std::max<std::size_t>(1, betas * codim);
      const auto need = static_cast<std::size_t>(std::ceil(opt.oversample * static_cast<double>(res.unknowns)));
      const std::size_t count = std::max<std::size_t>(8, (need + per_point - 1) / per_point + 1);
      auto pts = sample_points(p, count, opt.seed, opt.tol);
      Matrix sys = numeric_system(p, k, pts, opt.tol);
      res.rows = sys.rows();
      res.basis = fields_from_kernel(n, k, nullspace(sys, opt.tol));
      return res;
    }
    case Backend::exact_jet: {
      const auto& o = std::get<OrbitPresentation>(p);
      auto verify_pts = sample_points(p, opt.verify_points + 1, opt.seed + 7919, opt.tol);
      verify_pts.erase(verify_pts.begin());
      std::optional<std::size_t> prev;
      for (int order = k + 3; order <= opt.jet_cap; order += opt.jet_step) {
        Matrix sys = jet_system(o, k, order);
        auto ker = nullspace(sys);
        res.jet_history.emplace_back(order, ker.size());
        if (prev && *prev == ker.size()) {
          auto fields = fields_from_kernel(n, k, ker);
          bool ok = true;
          for (const auto& f : fields)
            for (const auto& x : verify_pts)
              if (tangency_residual(p, f, x, opt.tol) > opt.tol) ok = false;
          if (ok) {
            res.rows = sys.rows();
            res.jet_order = order;
            res.basis = std::move(fields);
            return res;
          }
        }
        prev = ker.size();
      }
      throw LimitError(kModule, "jet truncation reached order " + std::to_string(opt.jet_cap) + " at degree " +
                                    std::to_string(k) + " without a verified stable solution");
    }
    default:
      break;
  }
  throw InconsistencyError(kModule, "unresolved backend");
}

std::vector<PolyField> solve_graded_component(const Presentation& p, int k, const SolveOptions& opt) {
  return solve_component(p, k, opt).basis;
}

// ---------------------------------------------------------------------------
// Assembly

std::vector<std::size_t> GradedLieAlgebra::graded_dims() const {
  std::vector<std::size_t> d;
  for (const auto& c : components) d.push_back(c.size());
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_degree.size(); ++i)
    if (basis_degree[i] == k) out.push_back(i);
  return out;
}

Vector bracket_in_basis(const GradedLieAlgebra& g, const HolField& a, const HolField& b) {
  auto c = field_coordinates(g.basis, bracket(a, b), g.constants.tol());
  if (!c) throw InconsistencyError(kModule, "closure violation: bracket leaves the computed algebra");
  return *c;
}

GradedLieAlgebra assemble_hol(const Presentation& p, const AssembleOptions& opt) {
  const double tol = opt.solve.tol;
  const Vector& a = base_point(p);
  if (!is_conical(p, tol, opt.nondeg.samples, opt.nondeg.seed))
    throw RefusalError(kModule, "presentation is not conical; the graded solver does not apply");
  NondegeneracyResult nd = nondegeneracy_order(p, a, opt.nondeg);
  if (nd.kind != NondegKind::order)
    throw RefusalError(kModule, "finite nondegeneracy order not established (" + to_string(nd.kind) + ")");
  MinimalityReport mr = minimality_report(p, a, tol);
  if (mr.verdict != MinimalityVerdict::minimal)
    throw RefusalError(kModule, "tube is not certified minimal (" + to_string(mr.verdict) + ")");

  GradedLieAlgebra g;
  g.n = ambient_dim(p);
  g.backend = resolve_backend(p, opt.solve.backend);
  SolveOptions so = opt.solve;
  so.backend = g.backend;

  g.components.push_back(solve_graded_component(p, -1, so));

  // g_0 with the Euler field first.
  auto g0 = solve_graded_component(p, 0, so);
  PolyField euler(0, identity_map(g.n));
  {
    std::vector<HolField> hs;
    for (const auto& f : g0) hs.push_back(f.to_hol());
    if (!field_coordinates(hs, euler.to_hol(), tol))
      throw InconsistencyError(kModule, "Euler field is missing from g_0");
    std::vector<HolField> all{euler.to_hol()};
    all.insert(all.end(), hs.begin(), hs.end());
    FieldIndex index(all);
    Mode mode = euler.mode() == Mode::exact && (g0.empty() || g0.front().mode() == Mode::exact) ? Mode::exact : Mode::numeric;
    std::vector<Vector> cols;
    for (const auto& h : all) cols.push_back(index.flatten(h, mode));
    std::vector<PolyField> ordered;
    for (std::size_t i : independent_columns(Matrix::from_columns(cols), tol))
      ordered.push_back(i == 0 ? euler : g0[i - 1]);
    g.components.push_back(std::move(ordered));
  }

  for (int k = 1;; ++k) {
    if (k > opt.max_degree)
      throw LimitError(kModule, "g_k is nonzero up to max degree " + std::to_string(opt.max_degree));
    auto gk = solve_graded_component(p, k, so);
    if (gk.empty()) {
      g.stopped_at = k;
      break;
    }
    g.components.push_back(std::move(gk));
  }

  for (std::size_t c = 0; c < g.components.size(); ++c)
    for (const auto& f : g.components[c]) {
      g.basis.push_back(f.to_hol());
      g.basis_degree.push_back(static_cast<int>(c) - 1);
    }
  g.euler_index = g.n;
  g.constants = StructureConstants::from_fields(g.basis, tol);
  g.checks.push_back("closure");
  g.checks.push_back("jacobi");

  const std::size_t m = g.dim();
  double scale = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) scale = std::max(scale, std::abs(g.constants(i, j, k).to_double()));
  const double ztol = g.mode() == Mode::exact ? 0.0 : tol * scale;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (g.basis_degree[k] != g.basis_degree[i] + g.basis_degree[j] && !g.constants(i, j, k).is_zero(ztol))
          throw InconsistencyError(kModule, "grading violated: [g_" + std::to_string(g.basis_degree[i]) + ", g_" +
                                                std::to_string(g.basis_degree[j]) + "] leaves g_" +
                                                std::to_string(g.basis_degree[i] + g.basis_degree[j]));
  g.checks.push_back("grading");

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Scalar expect = j == k ? Scalar(g.basis_degree[j]) : Scalar(0);
      if (!(g.constants(g.euler_index, j, k) - expect).is_zero(ztol))
        throw InconsistencyError(kModule, "ad(z dz) does not act by the degree on basis element " + std::to_string(j));
    }
  g.checks.push_back("euler_grading");

  std::mt19937_64 rng(opt.solve.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& f = g.basis[i];
    const bool odd = g.basis_degree[i] % 2 != 0;
    if (!is_zero(odd ? f.re : f.im)) throw InconsistencyError(kModule, "parity of basis element " + std::to_string(i) + " is wrong");
    for (int t = 0; t < 4; ++t) {
      std::vector<Complex> z;
      for (std::size_t q = 0; q < g.n; ++q) z.emplace_back(0.0, unit(rng));
      double re = 0.0, mag = 0.0;
      for (const auto& w : f.eval(z)) {
        re = std::max(re, std::abs(w.real()));
        mag = std::max(mag, std::abs(w));
      }
      if (re > 1e-9 * std::max(1.0, mag))
        throw InconsistencyError(kModule, "basis element " + std::to_string(i) + " does not map iV into iV");
    }
  }
  g.checks.push_back("parity");
  return g;
}

}  // namespace crtube
