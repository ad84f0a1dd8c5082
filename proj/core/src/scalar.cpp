#include "crtube/scalar.hpp"

#include <charconv>
#include <cmath>

#include "crtube/errors.hpp"

namespace crtube {

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw InputError("numeric_kernel", "zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw InputError("numeric_kernel", "empty scalar literal");
  bool rational_form = s.find_first_of(".eE") == std::string::npos;
  if (rational_form) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("numeric_kernel", "bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw InputError("numeric_kernel", "zero denominator in '" + text + "'");
    return Scalar(q);
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("numeric_kernel", "bad decimal literal '" + text + "'");
  return Scalar(v);
}

void Scalar::canonicalize() {
  if (auto* q = std::get_if<Rational>(&value_)) q->canonicalize();
}

const Rational& Scalar::rational() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw InconsistencyError("numeric_kernel", "exact value requested from a numeric scalar");
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_mode(Mode m) const {
  if (m == mode()) return *this;
  if (m == Mode::numeric) return Scalar(to_double());
  throw InconsistencyError("numeric_kernel", "cannot convert a numeric scalar to exact mode");
}

bool Scalar::is_zero(double tol) const {
  if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  return std::abs(std::get<double>(value_)) <= tol;
}

int Scalar::sign(double tol) const {
  if (auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  double v = std::get<double>(value_);
  if (std::abs(v) <= tol) return 0;
  return v > 0 ? 1 : -1;
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<double>(value_));
}

namespace {

template <typename ExactOp, typename NumOp>
void combine(std::variant<Rational, double>& lhs, const Scalar& rhs, ExactOp exact, NumOp num) {
  if (auto* q = std::get_if<Rational>(&lhs); q && rhs.is_exact()) {
    exact(*q, rhs.rational());
    return;
  }
  double a = std::holds_alternative<Rational>(lhs) ? std::get<Rational>(lhs).get_d() : std::get<double>(lhs);
  lhs = num(a, rhs.to_double());
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o, [](Rational& a, const Rational& b) { a += b; }, [](double a, double b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o, [](Rational& a, const Rational& b) { a -= b; }, [](double a, double b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o, [](Rational& a, const Rational& b) { a *= b; }, [](double a, double b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_exact() && sgn(o.rational()) == 0) throw InconsistencyError("numeric_kernel", "division by zero");
  combine(value_, o, [](Rational& a, const Rational& b) { a /= b; }, [](double a, double b) { return a / b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  return std::string(buf, ptr);
}

Mode common_mode(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_exact()) return Mode::numeric;
  return Mode::exact;
}

Vector to_mode(const Vector& v, Mode m) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_mode(m));
  return out;
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

Vector from_doubles(const std::vector<double>& v) {
  Vector out;
  out.reserve(v.size());
  for (double x : v) out.emplace_back(x);
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InconsistencyError("numeric_kernel", "dot: size mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vector& v) {
  double s = 0.0;
  for (const auto& x : v) s += x.to_double() * x.to_double();
  return std::sqrt(s);
}

bool is_zero_vector(const Vector& v, double tol) {
  for (const auto& x : v)
    if (!x.is_zero(tol)) return false;
  return true;
}

}  // namespace crtube
