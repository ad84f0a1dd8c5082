#include "crtube/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crtube/errors.hpp"

namespace crtube {

namespace {
constexpr const char* kModule = "hol_solver";

void add_exps(const Exponent& a, const Exponent& b, Exponent& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
}

void monomials_rec(std::size_t n, std::size_t i, int left, Exponent& cur, std::vector<Exponent>& out) {
  if (i + 1 == n) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[i] = e;
    monomials_rec(n, i + 1, left - e, cur, out);
  }
}
}  // namespace

bool GrevlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

int total_degree(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) return out;
  Exponent cur(n, 0);
  monomials_rec(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e, Scalar(1));
}

Poly Poly::monomial(const Exponent& e, const Scalar& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_zero(double tol) const {
  for (const auto& [e, c] : terms_)
    if (!c.is_zero(tol)) return false;
  return true;
}

Mode Poly::mode() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_exact()) return Mode::numeric;
  return Mode::exact;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw InconsistencyError(kModule, "monomial arity mismatch");
  if (c.is_exact() && c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_exact() && it->second.is_zero()) terms_.erase(it);
}

Scalar Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

Poly Poly::derivative(std::size_t i) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    out.add_term(f, c * Scalar(e[i]));
  }
  return out;
}

Poly Poly::derivative(const Exponent& beta) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (!divides(beta, e)) continue;
    Exponent f = e;
    Integer factor = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < beta[i]; ++k) factor *= e[i] - k;
      f[i] -= beta[i];
    }
    out.add_term(f, c * Scalar(Rational(factor)));
  }
  return out;
}

Scalar Poly::eval(const Vector& x) const {
  if (x.size() != nvars_) throw InconsistencyError(kModule, "evaluation point arity mismatch");
  Scalar acc = common_mode(x) == Mode::exact ? Scalar(0) : Scalar(0.0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

double Poly::eval(const std::vector<double>& x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= std::pow(x[i], e[i]);
    acc += t;
  }
  return acc;
}

Complex Poly::eval(const std::vector<Complex>& z) const {
  Complex acc = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex t = c.to_double();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= z[i];
    acc += t;
  }
  return acc;
}

const Exponent& Poly::leading_monomial() const {
  if (terms_.empty()) throw InconsistencyError(kModule, "leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& Poly::leading_coefficient() const {
  if (terms_.empty()) throw InconsistencyError(kModule, "leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Poly Poly::normal_form(const Poly& h) const {
  if (h.is_zero()) return *this;
  const Exponent& lm = h.leading_monomial();
  const Scalar& lc = h.leading_coefficient();
  Poly p = *this;
  Poly r(nvars_);
  Exponent shift(nvars_);
  while (!p.terms_.empty()) {
    auto top = std::prev(p.terms_.end());
    Exponent e = top->first;
    Scalar c = top->second;
    if (!divides(lm, e)) {
      r.terms_.emplace(std::move(e), c);
      p.terms_.erase(top);
      continue;
    }
    for (std::size_t i = 0; i < nvars_; ++i) shift[i] = e[i] - lm[i];
    Scalar f = c / lc;
    p.terms_.erase(top);
    Exponent prod;
    for (const auto& [he, hc] : h.terms_) {
      if (he == lm) continue;
      add_exps(he, shift, prod);
      p.add_term(prod, -(f * hc));
    }
  }
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(std::max(a.nvars_, b.nvars_));
  Exponent e;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      add_exps(ea, eb, e);
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const Scalar& s, const Poly& p) {
  Poly out(p.nvars_);
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

std::string Poly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.to_string();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << var << (i + 1);
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

PolyMap zero_map(std::size_t n) { return PolyMap(n, Poly(n)); }

PolyMap identity_map(std::size_t n) {
  PolyMap m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(Poly::variable(n, i));
  return m;
}

PolyMap operator+(const PolyMap& a, const PolyMap& b) {
  PolyMap out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

PolyMap operator-(const PolyMap& a, const PolyMap& b) {
  PolyMap out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

PolyMap scale(const Scalar& s, const PolyMap& a) {
  PolyMap out;
  for (const auto& p : a) out.push_back(s * p);
  return out;
}

bool is_zero(const PolyMap& a, double tol) {
  for (const auto& p : a)
    if (!p.is_zero(tol)) return false;
  return true;
}

int degree(const PolyMap& a) {
  int d = -1;
  for (const auto& p : a) d = std::max(d, p.degree());
  return d;
}

Vector eval(const PolyMap& a, const Vector& x) {
  Vector out;
  for (const auto& p : a) out.push_back(p.eval(x));
  return out;
}

std::vector<double> eval(const PolyMap& a, const std::vector<double>& x) {
  std::vector<double> out;
  for (const auto& p : a) out.push_back(p.eval(x));
  return out;
}

PolyMap directional(const PolyMap& f, const PolyMap& g) {
  const std::size_t n = f.size();
  PolyMap out = zero_map(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (g[q].is_zero()) continue;
      Poly d = f[p].derivative(q);
      if (!d.is_zero()) out[p] += d * g[q];
    }
  return out;
}

PolyMap field_bracket(const PolyMap& f, const PolyMap& g) { return directional(g, f) - directional(f, g); }

// ---------------------------------------------------------------------------

bool HolField::is_zero(double tol) const { return crtube::is_zero(re, tol) && crtube::is_zero(im, tol); }

Mode HolField::mode() const {
  for (const auto& p : re)
    if (p.mode() == Mode::numeric) return Mode::numeric;
  for (const auto& p : im)
    if (p.mode() == Mode::numeric) return Mode::numeric;
  return Mode::exact;
}

std::vector<Complex> HolField::eval(const std::vector<Complex>& z) const {
  std::vector<Complex> out;
  for (std::size_t p = 0; p < re.size(); ++p) out.push_back(re[p].eval(z) + Complex(0, 1) * im[p].eval(z));
  return out;
}

HolField operator+(const HolField& a, const HolField& b) { return {a.re + b.re, a.im + b.im}; }
HolField operator-(const HolField& a, const HolField& b) { return {a.re - b.re, a.im - b.im}; }
HolField operator*(const Scalar& s, const HolField& a) { return {scale(s, a.re), scale(s, a.im)}; }

std::string HolField::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < re.size(); ++p) {
    if (p) os << ", ";
    bool r = !re[p].is_zero(), i = !im[p].is_zero();
    if (!r && !i) os << "0";
    if (r) os << re[p].to_string("z");
    if (r && i) os << " + ";
    if (i) os << "i*(" << im[p].to_string("z") << ")";
  }
  os << ")";
  return os.str();
}

HolField bracket(const HolField& a, const HolField& b) {
  HolField out;
  out.re = field_bracket(a.re, b.re) - field_bracket(a.im, b.im);
  out.im = field_bracket(a.re, b.im) + field_bracket(a.im, b.re);
  return out;
}

// ---------------------------------------------------------------------------

bool FieldIndex::Key::operator<(const Key& o) const {
  if (part != o.part) return part < o.part;
  if (comp != o.comp) return comp < o.comp;
  return GrevlexLess{}(exps, o.exps);
}

FieldIndex::FieldIndex(const std::vector<HolField>& fields) {
  for (const auto& f : fields) extend(f);
}

void FieldIndex::extend(const HolField& f) {
  auto add = [&](int part, const PolyMap& m) {
    for (std::size_t c = 0; c < m.size(); ++c)
      for (const auto& [e, coeff] : m[c].terms()) {
        Key k{part, c, e};
        if (!keys_.count(k)) keys_.emplace(k, keys_.size());
      }
  };
  add(0, f.re);
  add(1, f.im);
}

bool FieldIndex::covers(const HolField& f) const {
  auto check = [&](int part, const PolyMap& m) {
    for (std::size_t c = 0; c < m.size(); ++c)
      for (const auto& [e, coeff] : m[c].terms())
        if (!keys_.count(Key{part, c, e})) return false;
    return true;
  };
  return check(0, f.re) && check(1, f.im);
}

Vector FieldIndex::flatten(const HolField& f, Mode mode) const {
  Vector out(keys_.size(), mode == Mode::exact ? Scalar(0) : Scalar(0.0));
  auto put = [&](int part, const PolyMap& m) {
    for (std::size_t c = 0; c < m.size(); ++c)
      for (const auto& [e, coeff] : m[c].terms()) {
        auto it = keys_.find(Key{part, c, e});
        if (it == keys_.end()) throw InconsistencyError(kModule, "field has a monomial outside the index");
        out[it->second] = coeff.to_mode(mode);
      }
  };
  put(0, f.re);
  put(1, f.im);
  return out;
}

}  // namespace crtube
