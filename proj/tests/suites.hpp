#pragma once

// Shared end-to-end checks: the acceptance binary prints them, the property
// tests assert on them.

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crtube/catalog.hpp"
#include "crtube/endo_cone.hpp"
#include "crtube/errors.hpp"
#include "crtube/hol_solver.hpp"
#include "crtube/lie_analysis.hpp"
#include "crtube/nondegeneracy.hpp"

namespace crtube::suites {

struct Verdict {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool pass() const { return cases > 0 && failures.empty(); }
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  std::string summary() const {
    std::ostringstream s;
    s << cases << " checks";
    if (cases == 0) s << ", suite empty";
    for (const auto& f : failures) s << "; " << f;
    return s.str();
  }
};

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

inline std::string show(const Inertia& i) {
  return "(" + std::to_string(i.plus) + "," + std::to_string(i.minus) + "," + std::to_string(i.zero) + ")";
}

/// Runs f, turning an exception into a failed check.
inline void guarded(Verdict& v, const std::string& label, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    v.check(false, label + ": " + e.what());
  }
}

/// so(p, q) built from (p+q) x (p+q) matrices X with X^T J + J X = 0.
inline StructureConstants so_from_matrices(int p, int q) {
  const std::size_t n = static_cast<std::size_t>(p + q);
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int ei = static_cast<int>(i) < p ? 1 : -1;
      const int ej = static_cast<int>(j) < p ? 1 : -1;
      Matrix x(n, n);
      x.set(i, j, Scalar(ej));
      x.set(j, i, Scalar(-ei));
      basis.push_back(x);
    }
  auto flatten = [n](const Matrix& m) {
    Vector v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
    return v;
  };
  std::vector<Vector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  Matrix cols = Matrix::from_columns(flat, n * n);
  const std::size_t m = basis.size();
  std::vector<Scalar> table(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = solve(cols, flatten(commutator(basis[i], basis[j])));
      if (!c) throw InconsistencyError("suites", "so(p,q) basis not closed");
      for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = (*c)[k];
    }
  return StructureConstants(m, table);
}

inline GradedLieAlgebra hol_of(const std::string& name, const AssembleOptions& opt = {}) {
  return assemble_hol(build_entry_from_name(name).presentation, opt);
}

// 1. Light cone and EB(2,1,2).
inline Verdict criterion_light_cone() {
  Verdict v;
  guarded(v, "so(2,3) oracle", [&] {
    const Inertia oracle = killing_signature(so_from_matrices(2, 3));
    for (const std::string name : {"EI", "EB(2,1,2)"}) {
      GradedLieAlgebra g = hol_of(name);
      v.check(g.dim() == 10, name + " dim " + std::to_string(g.dim()));
      v.check(g.graded_dims() == std::vector<std::size_t>{3, 4, 3}, name + " graded " + show(g.graded_dims()));
      v.check(!derived_series(g.constants).solvable, name + " solvable");
      const Inertia k = killing_signature(g.constants);
      v.check(k.zero == 0, name + " Killing degenerate");
      v.check(k == oracle, name + " Killing " + show(k) + " vs oracle " + show(oracle));
    }
  });
  return v;
}

// 2. n = 4 quadrics.
inline Verdict criterion_quadrics_n4() {
  Verdict v;
  const std::vector<std::pair<std::string, std::pair<int, int>>> cases{{"EB(3,1,2)", {4, 2}}, {"EB(2,2,2)", {3, 3}}};
  for (const auto& [name, so] : cases)
    guarded(v, name, [&] {
      GradedLieAlgebra g = hol_of(name);
      v.check(g.dim() == 15, name + " dim " + std::to_string(g.dim()));
      const Inertia k = killing_signature(g.constants);
      v.check(k.zero == 0, name + " Killing degenerate " + show(k));
      v.check(k == killing_signature(so_from_matrices(so.first, so.second)), name + " Killing vs so oracle");
    });
  return v;
}

// 3. EB(2,1,3).
inline Verdict criterion_fermat_cubic_algebra() {
  Verdict v;
  guarded(v, "EB(2,1,3)", [&] {
    CatalogEntry e = build_entry_from_name("EB(2,1,3)");
    auto g0 = solve_component(e.presentation, 0).basis;
    v.check(g0.size() == 1, "g0 dim " + std::to_string(g0.size()));
    if (g0.size() == 1) {
      // Only multiples of z dz.
      Matrix m = linear_part(g0[0]);
      Matrix diff = m - Matrix::identity(3, m.mode()).scaled(m(0, 0));
      v.check(!m(0, 0).is_zero(1e-9) && diff.is_zero(1e-9), "g0 not spanned by the Euler field");
    }
    v.check(solve_component(e.presentation, 1).basis.empty(), "g1 nonzero");
    Ledger l = run_expected_checks(e);
    v.check(l.algebra && l.algebra->dim() == 4, "total dim != 4");
    v.check(std::find(l.flags.begin(), l.flags.end(), "not locally homogeneous") != l.flags.end(),
            "missing 'not locally homogeneous' flag");
  });
  return v;
}

// 4. Kernel profile on the Fermat cubic cone.
inline Verdict criterion_kernel_profile() {
  Verdict v;
  guarded(v, "profile", [&] {
    CatalogEntry e = build_entry_from_name("EB(2,1,3)");
    Vector witness{Scalar(1), Scalar(-1), Scalar(0)};
    v.check(levi_kernel(e.presentation, witness).dim() == 2, "dim K at (1,-1,0) != 2");
    v.check(levi_kernel(e.presentation, base_point(e.presentation), 1e-8).dim() == 1, "dim K at base != 1");
    for (const auto& w : e.witnesses)
      v.check(levi_kernel(e.presentation, w.point, 1e-8).dim() == w.kernel_dim, "witness " + w.label);
  });
  return v;
}

// 5. The five-dimensional examples.
inline Verdict criterion_five_dimensional() {
  Verdict v;
  for (const std::string name : {"EY(1/2)", "EY(1)", "EY(2)", "EZ", "EX(-3/2)", "EX(-2)"})
    guarded(v, name, [&] {
      CatalogEntry e = build_entry_from_name(name);
      NondegeneracyResult r = nondegeneracy_order(e.presentation, base_point(e.presentation));
      v.check(r.kind == NondegKind::order && r.order == 2, name + " order");
      GradedLieAlgebra g = assemble_hol(e.presentation);
      v.check(g.dim() == 5, name + " dim " + std::to_string(g.dim()));
      v.check(g.graded_dims() == std::vector<std::size_t>{3, 2}, name + " graded " + show(g.graded_dims()));
      DerivedSeries d = derived_series(g.constants);
      v.check(d.solvable && d.dims == std::vector<std::size_t>{5, 3, 0}, name + " derived " + show(d.dims));
    });
  return v;
}

// 6. EV verification path.
inline Verdict criterion_ev() {
  Verdict v;
  guarded(v, "EV", [&] {
    CatalogEntry e = build_entry_from_name("EV");
    CandidateVerification c = verify_candidates(e.presentation, e.candidate_fields, e.grading_index, 32, 42);
    v.check(c.points == 32, "points " + std::to_string(c.points));
    v.check(c.max_residual <= 1e-9, "residual " + std::to_string(c.max_residual));
    v.check(c.closed && c.constants.mode() == Mode::exact, "not closed exactly: " + c.closure_error);
    std::vector<Rational> want{-3, -2, -1, -1, 0};
    v.check(c.grading_spectrum_exact == want, "ad spectrum");
    v.check(c.derived.solvable && c.derived.commutator_dim() == 4, "derived " + show(c.derived.dims));
    NondegeneracyResult r = nondegeneracy_order(e.presentation, base_point(e.presentation));
    v.check(r.kind == NondegKind::order && r.order == 2, "order");
    v.check(c.completeness == "containment verified only", "completeness note");
  });
  return v;
}

inline InvariantReport report_for(const std::string& name) {
  CatalogEntry e = build_entry_from_name(name);
  if (e.verification_only())
    return invariant_report(verify_candidates(e.presentation, e.candidate_fields, e.grading_index, 8, 42).constants);
  return invariant_report(assemble_hol(e.presentation));
}

// 7. Pairwise distinctness.
inline Verdict criterion_pairwise_distinct() {
  Verdict v;
  guarded(v, "compare", [&] {
    const std::vector<std::string> names{"EI", "EY(1)", "EY(2)", "EZ", "EX(-2)", "EX(-3)", "EV"};
    std::vector<InvariantReport> reports;
    for (const auto& n : names) reports.push_back(report_for(n));
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        Comparison c = compare_algebras(reports[i], reports[j]);
        v.check(c.distinct, names[i] + " vs " + names[j] + " " + to_string(c));
      }
  });
  return v;
}

// 8. DU verdicts.
inline Verdict criterion_du() {
  Verdict v;
  const Complex i(0, 1);
  guarded(v, "DU", [&] {
    v.check(!du_condition(std::vector<Complex>{i, -i, 0.0}, 1), "{i,-i,0}");
    for (double a : {0.5, 1.0, 2.0}) v.check(du_condition(std::vector<Complex>{i, -i, a}, 1), "{i,-i,a}");
    for (double a : {-1.5, -2.0}) v.check(du_condition(std::vector<Complex>{a, 0.0, 1.0}, 1), "{a,0,1}");
  });
  return v;
}

// 9a. Kernel chains shrink monotonically, each space inside the previous one.
inline Verdict property_chain_monotone() {
  Verdict v;
  for (const auto& name : default_entry_names())
    guarded(v, name, [&] {
      CatalogEntry e = build_entry_from_name(name);
      if (const auto* o = std::get_if<OrbitPresentation>(&e.presentation)) {
        for (const auto& x : sample_points(e.presentation, 6, 7)) {
          KernelChain c = kernel_chain(*o, x, static_cast<int>(o->n()));
          for (std::size_t k = 1; k < c.spaces.size(); ++k)
            v.check(c.spaces[k].dim() <= c.spaces[k - 1].dim() && c.spaces[k - 1].contains(c.spaces[k]),
                    name + " chain step " + std::to_string(k));
        }
      } else {
        for (const auto& x : sample_points(e.presentation, 6, 7)) {
          Subspace t = tangent_space(e.presentation, x);
          Subspace k1 = levi_kernel(e.presentation, x);
          v.check(k1.dim() <= t.dim() && t.contains(k1), name + " K1 inside T");
        }
      }
    });
  return v;
}

inline std::vector<std::pair<std::string, GradedLieAlgebra>> computed_algebras() {
  std::vector<std::pair<std::string, GradedLieAlgebra>> out;
  for (const auto& name : default_entry_names()) {
    CatalogEntry e = build_entry_from_name(name);
    if (e.verification_only()) continue;
    out.emplace_back(name, assemble_hol(e.presentation));
  }
  return out;
}

// 9b. [g_k, g_l] inside g_(k+l).
inline Verdict property_grading_closure(const std::vector<std::pair<std::string, GradedLieAlgebra>>& algs) {
  Verdict v;
  for (const auto& [name, g] : algs)
    guarded(v, name, [&] {
      bool ok = true;
      for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
          for (std::size_t k = 0; k < g.dim(); ++k)
            if (g.basis_degree[k] != g.basis_degree[i] + g.basis_degree[j] &&
                !g.constants(i, j, k).is_zero(g.constants.tol()))
              ok = false;
      v.check(ok, name + " grading");
    });
  return v;
}

// 9c. Coefficients: even degree fields have real coefficients, odd degree purely imaginary.
inline Verdict property_parity(const std::vector<std::pair<std::string, GradedLieAlgebra>>& algs) {
  Verdict v;
  for (const auto& [name, g] : algs)
    for (std::size_t i = 0; i < g.dim(); ++i) {
      const HolField& f = g.basis[i];
      const bool odd = g.basis_degree[i] % 2 != 0;
      v.check(odd ? is_zero(f.re) : is_zero(f.im), name + " element " + std::to_string(i));
    }
  return v;
}

// 9d. Gamma-invariance of the canonical triple.
inline Verdict property_gamma_invariance(std::uint64_t seed = 20240601) {
  Verdict v;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<Complex> tri;
    if (t % 3 == 0) {
      Complex c(u(rng), u(rng));
      tri = {Complex(u(rng), 0.0), c, std::conj(c)};
    } else {
      tri = {Complex(u(rng), 0.0), Complex(u(rng), 0.0), Complex(u(rng), 0.0)};
    }
    double r = u(rng);
    if (std::abs(r) < 1e-3) r = 1.0;
    const double s = u(rng);
    std::vector<Complex> moved;
    for (const auto& z : tri) moved.push_back(r * z + s);
    v.check(same_triple(canonicalize(tri), canonicalize(moved), 1e-8), "trial " + std::to_string(t));
  }
  return v;
}

// 9e. Exact and numeric backends give the same graded dimensions.
inline Verdict property_backend_agreement() {
  Verdict v;
  SolveOptions num;
  num.backend = Backend::numeric;
  for (const auto& name : default_entry_names())
    guarded(v, name, [&] {
      CatalogEntry e = build_entry_from_name(name);
      if (e.verification_only()) return;
      for (int k = -1; k <= 2; ++k) {
        const std::size_t exact = solve_component(e.presentation, k).basis.size();
        const std::size_t numeric = solve_component(e.presentation, k, num).basis.size();
        v.check(exact == numeric, name + " k=" + std::to_string(k) + " exact " + std::to_string(exact) +
                                      " numeric " + std::to_string(numeric));
      }
    });
  return v;
}

// 9f. Once g_k = 0, g_(k+1) solved directly is zero too.
inline Verdict property_stopping_rule() {
  Verdict v;
  for (const std::string name : {"EI", "EB(2,1,3)"})
    guarded(v, name, [&] {
      CatalogEntry e = build_entry_from_name(name);
      GradedLieAlgebra g = assemble_hol(e.presentation);
      v.check(solve_component(e.presentation, g.stopped_at).basis.empty(), name + " g_k at the stop");
      v.check(solve_component(e.presentation, g.stopped_at + 1).basis.empty(), name + " g_(k+1)");
    });
  return v;
}

inline Verdict criterion_properties() {
  Verdict all;
  auto algs = computed_algebras();
  for (const Verdict& v : {property_chain_monotone(), property_grading_closure(algs), property_parity(algs),
                           property_gamma_invariance(), property_backend_agreement(), property_stopping_rule()}) {
    if (!v.pass()) all.failures.push_back(v.cases == 0 ? "empty property suite" : v.summary());
    all.cases += v.cases;
  }
  return all;
}

}  // namespace crtube::suites
