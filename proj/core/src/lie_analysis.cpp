#include "crtube/lie_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "lie_analysis";

Vector unit(std::size_t m, std::size_t i, Mode mode) {
  Vector v(m, mode == Mode::exact ? Scalar(0) : Scalar(0.0));
  v[i] = Scalar(1);
  return v;
}

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

/// Fuzzy lexicographic order on (re, im) pairs.
int compare_c(Complex a, Complex b) {
  constexpr double eps = 1e-9;
  if (std::abs(a.real() - b.real()) > eps) return a.real() < b.real() ? -1 : 1;
  if (std::abs(a.imag() - b.imag()) > eps) return a.imag() < b.imag() ? -1 : 1;
  return 0;
}

std::array<Complex, 3> sorted(std::array<Complex, 3> t) {
  std::sort(t.begin(), t.end(), [](Complex a, Complex b) { return compare_c(a, b) < 0; });
  return t;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string inertia_str(const Inertia& i) {
  return "(" + std::to_string(i.plus) + "+, " + std::to_string(i.minus) + "-, " + std::to_string(i.zero) + " zero)";
}
}  // namespace

DerivedSeries derived_series(const StructureConstants& l) {
  DerivedSeries ds;
  const std::size_t m = l.dim();
  ds.dims.push_back(m);
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < m; ++i) cur.push_back(unit(m, i, l.mode()));
  while (!cur.empty()) {
    std::vector<Vector> br;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) br.push_back(l.bracket(cur[i], cur[j]));
    Subspace next = Subspace::span(br, m, l.tol());
    ds.dims.push_back(next.dim());
    if (next.dim() == 0 || next.dim() == cur.size()) break;
    cur = next.basis().columns();
  }
  ds.solvable = ds.dims.back() == 0;
  return ds;
}

Matrix killing_form(const StructureConstants& l) {
  const std::size_t m = l.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < m; ++i) ad.push_back(l.ad(i));
  Matrix b(m, m, l.mode());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Scalar t = trace(ad[i] * ad[j]);
      b.set(i, j, t);
      b.set(j, i, t);
    }
  return b;
}

Inertia killing_signature(const StructureConstants& l) { return symmetric_inertia(killing_form(l), l.tol()); }

bool CanonicalTriple::is_real(double tol) const {
  return std::all_of(values.begin(), values.end(), [&](Complex z) { return std::abs(z.imag()) <= tol; });
}

CanonicalTriple canonicalize(const std::vector<Complex>& triple) {
  if (triple.size() != 3) throw InputError(kModule, "canonical form needs exactly three values");
  Complex mean = (triple[0] + triple[1] + triple[2]) / 3.0;
  // Only real translations are allowed; the imaginary part of the mean is 0
  // for a conjugation-closed triple.
  std::array<Complex, 3> t;
  double scale = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    t[i] = triple[i] - Complex(mean.real(), 0.0);
    scale = std::max(scale, std::abs(t[i]));
  }
  CanonicalTriple out;
  if (scale <= 1e-12) return out;
  std::array<Complex, 3> pos, neg;
  for (std::size_t i = 0; i < 3; ++i) {
    pos[i] = t[i] / scale;
    neg[i] = -t[i] / scale;
  }
  pos = sorted(pos);
  neg = sorted(neg);
  bool take_neg = false;
  for (std::size_t i = 0; i < 3; ++i) {
    int c = compare_c(neg[i], pos[i]);
    if (c != 0) {
      take_neg = c < 0;
      break;
    }
  }
  const auto& pick = take_neg ? neg : pos;
  for (std::size_t i = 0; i < 3; ++i) out.values[i] = Complex(clean(pick[i].real()), clean(pick[i].imag()));
  return out;
}

bool same_triple(const CanonicalTriple& a, const CanonicalTriple& b, double tol) {
  for (std::size_t i = 0; i < 3; ++i)
    if (std::abs(a.values[i].real() - b.values[i].real()) > tol || std::abs(a.values[i].imag() - b.values[i].imag()) > tol)
      return false;
  return true;
}

std::string to_string(const CanonicalTriple& t) {
  std::ostringstream os;
  os.precision(9);
  os << "{";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << ", ";
    os << t.values[i].real();
    if (t.values[i].imag() != 0.0) os << (t.values[i].imag() < 0 ? " - " : " + ") << std::abs(t.values[i].imag()) << "i";
  }
  os << "}";
  return os.str();
}

SigmaResult sigma_invariant(const GradedLieAlgebra& g, const std::optional<Vector>& xi) {
  SigmaResult res;
  const auto dims = g.graded_dims();
  if (g.n != 3 || dims != std::vector<std::size_t>{3, 2}) {
    res.reason = "needs n = 3 and graded dims (3,2), got n = " + std::to_string(g.n) + " and dims " + join(dims);
    return res;
  }
  const auto minus_one = g.indices_of_degree(-1);
  const auto zero = g.indices_of_degree(0);
  Vector x;
  if (xi) {
    if (xi->size() != g.dim()) throw InputError(kModule, "xi has the wrong number of coordinates");
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.basis_degree[i] != 0 && !(*xi)[i].is_zero(g.constants.tol()))
        throw InputError(kModule, "xi must lie in g_0");
    x = *xi;
  } else {
    std::size_t pick = zero.front() == g.euler_index ? zero.back() : zero.front();
    x = unit(g.dim(), pick, g.mode());
  }
  Matrix ad = g.constants.ad(x);
  const std::size_t r = minus_one.size();
  Matrix block(r, r, ad.mode());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) block.set(a, b, ad(minus_one[a], minus_one[b]));
  res.spectrum = char_poly_and_eigs(block).eigenvalues;
  res.triple = canonicalize(res.spectrum);
  double scale = 0.0;
  for (const auto& z : res.spectrum) scale = std::max(scale, std::abs(z));
  double spread = 0.0;
  for (const auto& z : res.spectrum) spread = std::max(spread, std::abs(z - res.spectrum.front()));
  if (spread <= 1e-9 * std::max(1.0, scale)) {
    res.reason = "xi acts by a scalar on g_-1 (multiple of z dz)";
    return res;
  }
  res.applicable = true;
  return res;
}

InvariantReport invariant_report(const StructureConstants& l) {
  InvariantReport r;
  r.dim = l.dim();
  r.derived = derived_series(l);
  r.killing = killing_signature(l);
  return r;
}

InvariantReport invariant_report(const GradedLieAlgebra& g) {
  InvariantReport r = invariant_report(g.constants);
  r.graded_dims = g.graded_dims();
  SigmaResult s = sigma_invariant(g);
  if (s.applicable) r.sigma = s.triple;
  return r;
}

bool Comparison::separated_by(const std::string& r) const {
  return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

Comparison compare_algebras(const InvariantReport& a, const InvariantReport& b, double sigma_tol) {
  Comparison c;
  auto differ = [&](const char* reason, std::string detail) {
    c.distinct = true;
    c.reasons.emplace_back(reason);
    c.details.push_back(std::move(detail));
  };
  if (a.dim != b.dim) differ("dimension", std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  if (a.derived.dims != b.derived.dims) differ("derived_series", join(a.derived.dims) + " vs " + join(b.derived.dims));
  if (!(a.killing == b.killing)) differ("killing", inertia_str(a.killing) + " vs " + inertia_str(b.killing));
  if (a.graded_dims && b.graded_dims && *a.graded_dims != *b.graded_dims)
    differ("graded_dims", join(*a.graded_dims) + " vs " + join(*b.graded_dims));
  if (a.sigma && b.sigma && !same_triple(*a.sigma, *b.sigma, sigma_tol))
    differ("sigma", to_string(*a.sigma) + " vs " + to_string(*b.sigma));
  return c;
}

std::string to_string(const Comparison& c) {
  if (!c.distinct) return "indistinguishable_by_suite";
  std::string s = "distinct(";
  for (std::size_t i = 0; i < c.reasons.size(); ++i) s += (i ? "," : "") + c.reasons[i];
  return s + ")";
}

}  // namespace crtube
