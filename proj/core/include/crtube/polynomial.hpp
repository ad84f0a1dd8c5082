#pragma once

#include <map>
#include <string>
#include <vector>

#include "crtube/scalar.hpp"

namespace crtube {

using Exponent = std::vector<int>;

/// Graded reverse lexicographic order (ascending).
struct GrevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);

/// All exponents of total degree d in n variables, in ascending grevlex order.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

/// Sparse multivariate polynomial with Scalar coefficients. Exact zero
/// coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponent, Scalar, GrevlexLess>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Exponent& e, const Scalar& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero(double tol = 0.0) const;
  Mode mode() const;

  void add_term(const Exponent& e, const Scalar& c);
  Scalar coefficient(const Exponent& e) const;

  /// Largest total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Part of total degree d.
  Poly homogeneous_part(int d) const;

  Poly derivative(std::size_t i) const;
  Poly derivative(const Exponent& beta) const;

  Scalar eval(const Vector& x) const;
  double eval(const std::vector<double>& x) const;
  Complex eval(const std::vector<Complex>& z) const;

  const Exponent& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  /// Remainder of division by h (unique, since {h} is a Groebner basis of (h)).
  Poly normal_form(const Poly& h) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Human-readable form in variables named `var`1..n.
  std::string to_string(const std::string& var = "x") const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// A polynomial map R^n -> R^n, i.e. the coefficient vector of a field f dx.
using PolyMap = std::vector<Poly>;

PolyMap zero_map(std::size_t n);
PolyMap identity_map(std::size_t n);
PolyMap operator+(const PolyMap& a, const PolyMap& b);
PolyMap operator-(const PolyMap& a, const PolyMap& b);
PolyMap scale(const Scalar& s, const PolyMap& a);
bool is_zero(const PolyMap& a, double tol = 0.0);
int degree(const PolyMap& a);
Vector eval(const PolyMap& a, const Vector& x);
std::vector<double> eval(const PolyMap& a, const std::vector<double>& x);

/// Directional derivative Df . g.
PolyMap directional(const PolyMap& f, const PolyMap& g);
/// Vector-field bracket [f dx, g dx] = (Dg . f - Df . g) dx.
PolyMap field_bracket(const PolyMap& f, const PolyMap& g);

/// Holomorphic polynomial field (re + i im)(z) dz with real-coefficient maps.
struct HolField {
  PolyMap re;
  PolyMap im;

  std::size_t n() const { return re.size(); }
  bool is_zero(double tol = 0.0) const;
  Mode mode() const;
  std::vector<Complex> eval(const std::vector<Complex>& z) const;

  friend HolField operator+(const HolField& a, const HolField& b);
  friend HolField operator-(const HolField& a, const HolField& b);
  friend HolField operator*(const Scalar& s, const HolField& a);
  friend bool operator==(const HolField& a, const HolField& b) { return a.re == b.re && a.im == b.im; }

  std::string to_string() const;
};

/// [A + iB, C + iD] = [A,C] - [B,D] + i([A,D] + [B,C]).
HolField bracket(const HolField& a, const HolField& b);

/// Coordinates of fields over a shared monomial index (part, component, exponent).
class FieldIndex {
 public:
  explicit FieldIndex(const std::vector<HolField>& fields);
  void extend(const HolField& f);
  std::size_t size() const { return keys_.size(); }
  /// Flattened coordinates; every key of f must already be indexed.
  Vector flatten(const HolField& f, Mode mode) const;
  bool covers(const HolField& f) const;

 private:
  struct Key {
    int part;
    std::size_t comp;
    Exponent exps;
    bool operator<(const Key& o) const;
  };
  std::map<Key, std::size_t> keys_;
};

}  // namespace crtube
