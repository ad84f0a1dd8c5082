#include "crtube/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <regex>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "catalog";

std::string dims_str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string rationals_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string inertia_str(const Inertia& i) {
  return "(" + std::to_string(i.plus) + "," + std::to_string(i.minus) + "," + std::to_string(i.zero) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Vector rational_vector(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Matrix square(std::size_t n, std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m(n, n);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m.set(i, j++, Scalar(x));
    ++i;
  }
  return m;
}

AffineField euler(std::size_t n) { return AffineField(Matrix::identity(n)); }

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Signs (+1 x p, -1 x q).
std::vector<int> signs(int p, int q) {
  std::vector<int> e(static_cast<std::size_t>(p), 1);
  e.insert(e.end(), static_cast<std::size_t>(q), -1);
  return e;
}

/// Smallest max-coordinate positive integer point of sum eps_i x_i^alpha = 0,
/// first in lexicographic order; empty when none has coordinates <= bound.
std::optional<Vector> integer_point(const std::vector<int>& eps, int alpha, int bound) {
  const std::size_t n = eps.size();
  for (int b = 1; b <= bound; ++b) {
    std::vector<int> x(n, 1);
    while (true) {
      if (*std::max_element(x.begin(), x.end()) == b) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) {
          Integer t;
          mpz_pow_ui(t.get_mpz_t(), Integer(x[i]).get_mpz_t(), static_cast<unsigned long>(alpha));
          s += eps[i] * t;
        }
        if (s == 0) {
          Vector v;
          for (int xi : x) v.emplace_back(xi);
          return v;
        }
      }
      std::size_t i = n;
      while (i > 0 && x[i - 1] == b) x[--i] = 1;
      if (i == 0) break;
      ++x[i - 1];
    }
  }
  return std::nullopt;
}

CatalogEntry three_dim_orbit(const std::string& name, const std::string& family, Matrix phi, Vector base) {
  return CatalogEntry(name, family, OrbitPresentation({euler(3), AffineField(std::move(phi))}, std::move(base)));
}

void expect_five_dim(Expected& ex, const std::string& sigma, const std::string& why_sigma) {
  ex.nondeg_order = 2;
  ex.graded_dims = std::vector<std::size_t>{3, 2};
  ex.algebra_dim = 5;
  ex.solvable = true;
  ex.commutator_dim = 3;
  ex.derived_dims = std::vector<std::size_t>{5, 3, 0};
  ex.sigma_class = sigma;
  ex.locally_homogeneous = true;
  ex.notes = {{"nondeg_order", "cyclic endomorphism cone with the eigenvalue-difference condition: 2-nondegenerate"},
              {"graded_dims", "g = g_-1 + g_0 with g_0 spanned by z dz and the linear field of phi"},
              {"algebra_dim", "three translations i dz plus two linear fields"},
              {"solvable", "g_0 is abelian and acts on the abelian ideal g_-1"},
              {"commutator_dim", "[g,g] = g_-1"},
              {"derived_dims", "[g,g] = g_-1 is abelian"},
              {"sigma_class", why_sigma},
              {"locally_homogeneous", "the orbit of the two linear fields is open in F, translations fill iR^3"}};
}

std::string describe_alpha(const Rational& a) { return a.get_str(); }

}  // namespace

std::string Expected::note(const std::string& key) const {
  for (const auto& [k, v] : notes)
    if (k == key) return v;
  return {};
}

CatalogEntry::CatalogEntry(std::string name_, std::string family_, Presentation p)
    : name(std::move(name_)), family(std::move(family_)), presentation(std::move(p)) {}

std::vector<std::string> family_names() { return {"EI", "EY", "EZ", "EX", "EV", "EB"}; }

std::vector<std::string> default_entry_names() {
  return {"EI",         "EY(1/2)",   "EY(1)",     "EY(2)",     "EZ",        "EX(-3/2)", "EX(-2)",
          "EX(-3)",     "EV",        "EB(2,1,2)", "EB(3,1,2)", "EB(2,2,2)", "EB(2,1,3)"};
}

OrbitPresentation quadric_orbit(int p, int q, const Vector& a) {
  const auto eps = signs(p, q);
  const std::size_t n = eps.size();
  std::vector<AffineField> gens{euler(n)};
  // A = eps_j E_ij - eps_i E_ji satisfies A^T diag(eps) + diag(eps) A = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix m(n, n);
      m.set(i, j, Scalar(eps[j]));
      m.set(j, i, Scalar(-eps[i]));
      gens.emplace_back(std::move(m));
    }
  return OrbitPresentation(std::move(gens), a);
}

Inertia so_killing_inertia(int a, int b) {
  Inertia in;
  in.plus = static_cast<std::size_t>(a * b);
  in.minus = static_cast<std::size_t>(binom(a, 2) + binom(b, 2));
  return in;
}

std::string sigma_class(const CanonicalTriple& t, double tol) {
  if (!t.is_real(tol)) return "non-real";
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(t.values[i] - t.values[j]) <= tol) return "real-repeated";
  return "real-distinct";
}

CatalogEntry build_entry(const std::string& family, const CatalogParams& params) {
  if (family == "EI") {
    CatalogEntry e("EI", family, OrbitPresentation({euler(3), AffineField(square(3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}))},
                                                   rational_vector({1, 0, 1})));
    auto& ex = e.expected;
    ex.nondeg_order = 2;
    ex.graded_dims = std::vector<std::size_t>{3, 4, 3};
    ex.algebra_dim = 10;
    ex.solvable = false;
    ex.derived_dims = std::vector<std::size_t>{10, 10};
    ex.killing_nondegenerate = true;
    ex.killing_inertia = so_killing_inertia(3, 2);
    ex.sigma_class = "none";
    ex.locally_homogeneous = true;
    ex.notes = {{"nondeg_order", "future light cone: Levi kernel is the ruling, killed at the second step"},
                {"graded_dims", "translations, co(2,1), and the three inversion fields"},
                {"algebra_dim", "so(2,3) has dimension 10"},
                {"derived_dims", "so(2,3) is simple, so [g,g] = g"},
                {"solvable", "so(2,3) is simple"},
                {"killing_nondegenerate", "semisimple"},
                {"killing_inertia", "so(3,2) Cartan decomposition: 6 noncompact, 4 compact directions"},
                {"sigma_class", "graded dims are not (3,2)"},
                {"locally_homogeneous", "SO(2,3) acts transitively on the tube over the cone"}};
    return e;
  }
  if (family == "EY") {
    Rational a = params.alpha.value_or(Rational(1));
    if (sgn(a) <= 0) throw InputError(kModule, "EY needs alpha > 0");
    auto e = three_dim_orbit("EY(" + describe_alpha(a) + ")", family, square(3, {{0, -1, 0}, {1, 0, 0}, {0, 0, a}}),
                             rational_vector({1, 0, 1}));
    expect_five_dim(e.expected, "non-real", "phi has eigenvalues {i, -i, alpha}");
    return e;
  }
  if (family == "EZ") {
    auto e = three_dim_orbit("EZ", family, square(3, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}), rational_vector({1, 0, 1}));
    expect_five_dim(e.expected, "real-repeated", "phi has eigenvalues {0, 0, 1}");
    return e;
  }
  if (family == "EX") {
    Rational a = params.alpha.value_or(Rational(-2));
    if (a >= -1) throw InputError(kModule, "EX needs alpha < -1");
    auto e = three_dim_orbit("EX(" + describe_alpha(a) + ")", family, square(3, {{0, 0, 0}, {0, 1, 0}, {0, 0, a}}),
                             rational_vector({1, 1, 1}));
    expect_five_dim(e.expected, "real-distinct", "phi has distinct real eigenvalues {alpha, 0, 1}");
    return e;
  }
  if (family == "EV") {
    Matrix zeta = square(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    Matrix eta_lin = square(3, {{0, 0, 0}, {2, 0, 0}, {0, 3, 0}});
    AffineField eta(eta_lin, rational_vector({1, 0, 0}));
    CatalogEntry e("EV", family, OrbitPresentation({AffineField(zeta), eta}, rational_vector({1, 0, 0})));
    for (std::size_t i = 0; i < 3; ++i) {
      PolyMap c = zero_map(3);
      c[i] = Poly::constant(3, Scalar(1));
      e.candidate_fields.push_back(HolField{zero_map(3), c});
    }
    e.candidate_fields.push_back(HolField{eta.as_map(), zero_map(3)});
    e.candidate_fields.push_back(HolField{AffineField(zeta).as_map(), zero_map(3)});
    e.grading_index = 4;
    auto& ex = e.expected;
    ex.nondeg_order = 2;
    ex.algebra_dim = 5;
    ex.solvable = true;
    ex.commutator_dim = 4;
    ex.derived_dims = std::vector<std::size_t>{5, 4, 2, 0};
    ex.grading_spectrum = std::vector<Rational>{-3, -2, -1, -1, 0};
    ex.notes = {{"nondeg_order", "tangent developable of the twisted cubic: kernel chain stops at step 2"},
                {"containment", "Re X tangent to M at sampled points of the tube"},
                {"bracket_closed", "candidate fields span a Lie algebra"},
                {"algebra_dim", "i dz_1, i dz_2, i dz_3, eta, zeta"},
                {"grading_spectrum", "ad(zeta) weights of i dz_1, i dz_2, i dz_3, eta, zeta"},
                {"derived_dims", "bracket table of the five candidate fields"},
                {"solvable", "graded by ad(zeta) with a single weight-0 direction"},
                {"commutator_dim", "[g,g] spans the three translations and eta"}};
    return e;
  }
  if (family == "EB") {
    const int p = params.p.value_or(2), q = params.q.value_or(1);
    Rational ar = params.alpha.value_or(Rational(2));
    if (q < 0 || p < q || p + q < 3) throw InputError(kModule, "EB needs p >= q >= 0 and p + q >= 3");
    if (ar.get_den() != 1 || ar < 2) throw InputError(kModule, "EB level set needs an integer alpha >= 2");
    const int alpha = static_cast<int>(ar.get_num().get_si());
    const auto eps = signs(p, q);
    const std::size_t n = eps.size();
    Poly h(n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n, 0);
      e[i] = alpha;
      h.add_term(e, Scalar(eps[i]));
    }
    Vector base;
    if (auto pt = integer_point(eps, alpha, 12)) {
      base = *pt;
    } else {
      // All ones except the last coordinate, solved in floating point.
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) s += eps[i];
      const int last = eps[n - 1];
      double t = -s / last;
      if (t < 0 && alpha % 2 == 0) throw InputError(kModule, "EB level set has no real point off the origin");
      double x = t < 0 ? -std::pow(-t, 1.0 / alpha) : std::pow(t, 1.0 / alpha);
      for (std::size_t i = 0; i + 1 < n; ++i) base.emplace_back(1.0);
      base.emplace_back(x);
    }
    const std::string name = "EB(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(alpha) + ")";
    CatalogEntry e(name, family, LevelSetPresentation(h, base));
    auto& ex = e.expected;
    ex.nondeg_order = 2;
    if (alpha == 2) {
      const auto nn = static_cast<std::size_t>(n);
      ex.graded_dims = std::vector<std::size_t>{nn, static_cast<std::size_t>(binom(static_cast<long>(n), 2)) + 1, nn};
      ex.algebra_dim = static_cast<std::size_t>(binom(static_cast<long>(n) + 2, 2));
      ex.solvable = false;
      ex.killing_nondegenerate = true;
      ex.killing_inertia = so_killing_inertia(p + 1, q + 1);
      ex.locally_homogeneous = true;
      ex.notes = {{"graded_dims", "translations, co(p,q), and the n inversion fields"},
                  {"algebra_dim", "quadric cone: so(p+1,q+1), dimension C(n+2,2)"},
                  {"solvable", "so(p+1,q+1) is simple for n >= 3"},
                  {"killing_nondegenerate", "semisimple"},
                  {"killing_inertia", "so(p+1,q+1) Cartan decomposition count"},
                  {"locally_homogeneous", "the conformal group acts transitively on the tube over the cone"}};
    } else {
      ex.graded_dims = std::vector<std::size_t>{n, 1};
      ex.algebra_dim = n + 1;
      ex.solvable = true;
      ex.locally_homogeneous = false;
      ex.notes = {{"graded_dims", "alpha != 2: only translations and z dz survive"},
                  {"algebra_dim", "n translations plus z dz"},
                  {"solvable", "z dz acts on the abelian ideal of translations"},
                  {"locally_homogeneous", "dim g = n + 1 < 2n - 1 = dim M"}};
      if (p == 2 && q == 1 && alpha == 3) {
        e.witnesses.push_back({rational_vector({1, -1, 0}), 2, "witness (1,-1,0)"});
        e.witnesses.push_back({base, 1, "generic positive point"});
        ex.notes.emplace_back("levi_kernel", "dim K_x = 1 + number of vanishing coordinates");
      }
    }
    ex.sigma_class = "none";
    ex.notes.emplace_back("sigma_class", "graded dims are not (3,2) for n = 3, or n != 3");
    ex.notes.emplace_back("nondeg_order", "conical hypersurface whose Levi kernel is the radial line");
    return e;
  }
  throw InputError(kModule, "unknown catalog family '" + family + "'");
}

CatalogEntry build_entry_from_name(const std::string& name) {
  static const std::regex re(R"(^\s*([A-Za-z]+)\s*(?:\(([^)]*)\))?\s*$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw InputError(kModule, "cannot parse catalog entry '" + name + "'");
  std::string family = m[1];
  std::transform(family.begin(), family.end(), family.begin(), [](unsigned char c) { return std::toupper(c); });
  std::vector<std::string> args;
  if (m[2].matched) {
    std::string s = m[2];
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (!tok.empty()) args.push_back(tok);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  auto rational = [&](const std::string& s) {
    Scalar v = Scalar::parse(s);
    if (!v.is_exact()) throw InputError(kModule, "catalog parameters must be rational, got '" + s + "'");
    return v.rational();
  };
  auto integer = [&](const std::string& s) {
    Rational r = rational(s);
    if (r.get_den() != 1) throw InputError(kModule, "expected an integer parameter, got '" + s + "'");
    return static_cast<int>(r.get_num().get_si());
  };
  CatalogParams params;
  if (family == "EY" || family == "EX") {
    if (args.size() > 1) throw InputError(kModule, family + " takes one parameter (alpha)");
    if (!args.empty()) params.alpha = rational(args[0]);
  } else if (family == "EB") {
    if (args.size() != 0 && args.size() != 2 && args.size() != 3) throw InputError(kModule, "EB takes (p,q) or (p,q,alpha)");
    if (args.size() >= 2) {
      params.p = integer(args[0]);
      params.q = integer(args[1]);
    }
    if (args.size() == 3) params.alpha = rational(args[2]);
  } else if (!args.empty()) {
    throw InputError(kModule, family + " takes no parameters");
  }
  return build_entry(family, params);
}

CandidateVerification verify_candidates(const Presentation& p, const std::vector<HolField>& fields,
                                        std::size_t grading_index, std::size_t points, std::uint64_t seed,
                                        double tol) {
  if (grading_index >= fields.size()) throw InputError(kModule, "grading field index out of range");
  CandidateVerification v;
  const std::size_t n = ambient_dim(p);
  auto pts = sample_points(p, points, seed, tol);
  v.points = pts.size();
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const auto& x : pts) {
    const auto xd = to_doubles(x);
    std::vector<Complex> z;
    for (std::size_t i = 0; i < n; ++i) z.emplace_back(xd[i], unit(rng));
    Matrix ann = tangent_space(p, to_mode(x, Mode::numeric), tol).annihilator();
    for (const auto& f : fields) {
      auto w = f.eval(z);
      double mag = 0.0;
      for (const auto& c : w) mag += c.real() * c.real();
      mag = std::sqrt(mag);
      if (mag == 0.0) continue;
      for (std::size_t r = 0; r < ann.rows(); ++r) {
        auto nu = to_doubles(ann.row(r));
        double s = 0.0, nn = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          s += nu[i] * w[i].real();
          nn += nu[i] * nu[i];
        }
        v.max_residual = std::max(v.max_residual, std::abs(s) / (std::sqrt(nn) * mag));
      }
    }
  }
  try {
    v.constants = StructureConstants::from_fields(fields, tol);
    v.closed = true;
  } catch (const InconsistencyError& e) {
    v.closure_error = e.what();
    return v;
  }
  CharPoly cp = char_poly_and_eigs(v.constants.ad(grading_index));
  v.grading_spectrum = cp.eigenvalues;
  if (cp.splits_over_rationals) {
    v.grading_spectrum_exact = cp.rational_roots;
    std::sort(v.grading_spectrum_exact.begin(), v.grading_spectrum_exact.end());
  }
  v.derived = derived_series(v.constants);
  return v;
}

bool Ledger::passed() const {
  return error.empty() && std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

Ledger run_expected_checks(const CatalogEntry& e, const RunOptions& opt) {
  Ledger l;
  l.entry = e.name;
  const auto& ex = e.expected;
  const Presentation& p = e.presentation;
  const double tol = opt.assemble.solve.tol;
  auto add = [&](const std::string& name, const std::string& expected, const std::string& actual, const std::string& key) {
    l.rows.push_back({name, expected, actual, expected == actual, ex.note(key)});
  };

  try {
    l.nondeg = nondegeneracy_order(p, base_point(p), opt.assemble.nondeg);
  } catch (const Error& err) {
    l.error = err.what();
    l.rows.push_back({"nondeg_order", ex.nondeg_order ? std::to_string(*ex.nondeg_order) : "-", err.what(), false, {}});
    return l;
  }
  if (ex.nondeg_order) {
    std::string actual = l.nondeg.kind == NondegKind::order ? std::to_string(l.nondeg.order) : to_string(l.nondeg.kind);
    add("nondeg_order", std::to_string(*ex.nondeg_order), actual, "nondeg_order");
  }
  for (const auto& w : e.witnesses)
    add("levi_kernel_dim at " + w.label, std::to_string(w.kernel_dim), std::to_string(levi_kernel(p, w.point, tol).dim()),
        "levi_kernel");

  if (e.verification_only()) {
    auto v = verify_candidates(p, e.candidate_fields, e.grading_index, opt.verify_points, opt.assemble.solve.seed, tol);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v.max_residual);
    char lim[64];
    std::snprintf(lim, sizeof lim, "<= %.0e", opt.residual_tol);
    l.rows.push_back({"tangency_residual (" + std::to_string(v.points) + " points)", lim, buf,
                      v.points >= opt.verify_points && v.max_residual <= opt.residual_tol, ex.note("containment")});
    l.rows.push_back({"bracket_closed", "yes", v.closed ? "yes" : v.closure_error, v.closed, ex.note("bracket_closed")});
    if (v.closed) {
      if (ex.algebra_dim) add("algebra_dim", std::to_string(*ex.algebra_dim), std::to_string(v.constants.dim()), "algebra_dim");
      if (ex.grading_spectrum)
        add("grading_spectrum", rationals_str(*ex.grading_spectrum),
            v.grading_spectrum_exact.empty() ? "not rational" : rationals_str(v.grading_spectrum_exact), "grading_spectrum");
      if (ex.derived_dims) add("derived_dims", dims_str(*ex.derived_dims), dims_str(v.derived.dims), "derived_dims");
      if (ex.solvable) add("solvable", yes_no(*ex.solvable), yes_no(v.derived.solvable), "solvable");
      if (ex.commutator_dim)
        add("commutator_dim", std::to_string(*ex.commutator_dim), std::to_string(v.derived.commutator_dim()), "commutator_dim");
      l.invariants = invariant_report(v.constants);
    }
    l.flags.push_back(v.completeness);
    l.verification = std::move(v);
    return l;
  }

  try {
    l.algebra = assemble_hol(p, opt.assemble);
  } catch (const Error& err) {
    l.error = err.what();
    l.rows.push_back({"hol", "computed", err.what(), false, {}});
    return l;
  }
  const auto& g = *l.algebra;
  l.invariants = invariant_report(g);
  const auto& inv = *l.invariants;
  if (ex.graded_dims) add("graded_dims", dims_str(*ex.graded_dims), dims_str(g.graded_dims()), "graded_dims");
  if (ex.algebra_dim) add("algebra_dim", std::to_string(*ex.algebra_dim), std::to_string(g.dim()), "algebra_dim");
  if (ex.derived_dims) add("derived_dims", dims_str(*ex.derived_dims), dims_str(inv.derived.dims), "derived_dims");
  if (ex.solvable) add("solvable", yes_no(*ex.solvable), yes_no(inv.derived.solvable), "solvable");
  if (ex.commutator_dim)
    add("commutator_dim", std::to_string(*ex.commutator_dim), std::to_string(inv.derived.commutator_dim()), "commutator_dim");
  if (ex.killing_nondegenerate)
    add("killing_nondegenerate", yes_no(*ex.killing_nondegenerate), yes_no(inv.killing.zero == 0), "killing_nondegenerate");
  if (ex.killing_inertia) add("killing_inertia", inertia_str(*ex.killing_inertia), inertia_str(inv.killing), "killing_inertia");
  if (inv.sigma) l.sigma = to_string(*inv.sigma);
  if (ex.sigma_class) add("sigma_class", *ex.sigma_class, inv.sigma ? sigma_class(*inv.sigma) : "none", "sigma_class");
  const std::size_t dim_m = tangent_space(p, base_point(p), tol).dim() + ambient_dim(p);
  const bool homogeneous = g.dim() >= dim_m;
  if (!homogeneous) l.flags.push_back("not locally homogeneous");
  if (ex.locally_homogeneous) add("locally_homogeneous", yes_no(*ex.locally_homogeneous), yes_no(homogeneous), "locally_homogeneous");
  return l;
}

}  // namespace crtube
