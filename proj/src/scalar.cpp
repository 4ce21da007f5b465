#include "triplekit/scalar.hpp"

#include <cctype>

#include "triplekit/error.hpp"

namespace triplekit {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num) || (slash != std::string_view::npos && !valid_integer(den))) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  mpz_class p(strip_plus(num), 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) q = mpz_class(strip_plus(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar value(p, q);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) {
  Scalar c = value;
  c.canonicalize();
  return c.get_str(10);
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy length mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out = a;
  axpy(out, 1, b);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out = a;
  axpy(out, -1, b);
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

}  // namespace triplekit
