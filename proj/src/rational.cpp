#include "g1/rational.hpp"

#include <cctype>

namespace g1 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw MathError("zero to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::optional<Integer> integer_sqrt_exact(const Integer& z) {
  if (z < 0) return std::nullopt;
  if (!mpz_perfect_square_p(z.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = integer_sqrt_exact(q.get_num());
  auto d = integer_sqrt_exact(q.get_den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

namespace {

std::optional<Integer> integer_cbrt_exact(const Integer& z) {
  Integer a = abs(z);
  Integer r;
  if (!mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3)) return std::nullopt;
  return z < 0 ? Integer(-r) : r;
}

}  // namespace

std::optional<Rational> rational_cbrt(const Rational& q) {
  auto n = integer_cbrt_exact(q.get_num());
  auto d = integer_cbrt_exact(q.get_den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace g1
