#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace crtube {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

enum class Mode { exact, numeric };

/// Default relative cut for numeric rank decisions.
inline constexpr double kDefaultTol = 1e-8;

/// A field element that is either an exact rational (always canonical: lowest
/// terms, positive denominator) or a double. Arithmetic between two exact
/// values stays exact; any numeric operand makes the result numeric.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}         // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}        // NOLINT(google-explicit-constructor)
  Scalar(long long v) : value_(Rational(static_cast<long>(v))) {}  // NOLINT
  Scalar(const Rational& v) : value_(v) { canonicalize(); }        // NOLINT
  Scalar(Rational&& v) : value_(std::move(v)) { canonicalize(); }  // NOLINT
  explicit Scalar(double v) : value_(v) {}

  static Scalar numeric(double v) { return Scalar(v); }
  static Scalar ratio(long num, long den);
  /// Parses "p/q", "p" (exact) or a decimal literal such as "1.25" / "1e-3" (numeric).
  static Scalar parse(const std::string& text);

  Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::exact : Mode::numeric; }
  bool is_exact() const { return mode() == Mode::exact; }

  const Rational& rational() const;
  double to_double() const;
  Scalar to_mode(Mode m) const;

  bool is_zero(double tol = 0.0) const;
  int sign(double tol = 0.0) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality for exact scalars; bitwise-value equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" for exact values, shortest round-trip decimal for numeric ones.
  std::string to_string() const;

 private:
  void canonicalize();

  std::variant<Rational, double> value_;
};

using Vector = std::vector<Scalar>;

Mode common_mode(const Vector& v);
Vector to_mode(const Vector& v, Mode m);
std::vector<double> to_doubles(const Vector& v);
Vector from_doubles(const std::vector<double>& v);
Scalar dot(const Vector& a, const Vector& b);
double norm2(const Vector& v);
bool is_zero_vector(const Vector& v, double tol = 0.0);

}  // namespace crtube
