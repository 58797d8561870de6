#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace g1 {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a mathematical precondition fails (singular model, inexact
// division, irrational root where a rational one is required, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational power(const Rational& base, int exponent);

std::optional<Integer> integer_sqrt_exact(const Integer& z);
std::optional<Rational> rational_sqrt(const Rational& q);
std::optional<Rational> rational_cbrt(const Rational& q);

}  // namespace g1
