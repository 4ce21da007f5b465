#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace triplekit {

/// Exact rational number. GMP keeps every value canonical (positive
/// denominator, reduced) after each arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p", "-p" or "p/q" (q != 0). Throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

bool is_zero(const Vector& v);

/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

}  // namespace triplekit
