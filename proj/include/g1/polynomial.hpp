#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g1/rational.hpp"

namespace g1 {

using Exponents = std::vector<int>;

// Graded lexicographic order, largest monomial first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over Q in a fixed number of variables. Zero coefficients
// are never stored, so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars);
  Polynomial(std::size_t nvars, const Rational& constant);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents exps, const Rational& coeff);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  void add_term(const Exponents& exps, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  // Simultaneous substitution x_i -> images[i]; the result lives in the
  // ring of the images.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Quotient by a divisor that divides exactly; throws MathError otherwise.
  Polynomial divide_exact(const Polynomial& divisor) const;

  Polynomial homogeneous_part(int degree) const;

  // Groups terms by the exponents of the `outer` variables. Each value is a
  // polynomial in the remaining variables, in their original order.
  std::map<Exponents, Polynomial> split(const std::vector<std::size_t>& outer) const;

  // Moves variable i to position target[i] of a ring with new_nvars variables.
  Polynomial remap(std::size_t new_nvars, const std::vector<std::size_t>& target) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

// Parses sums of terms such as "3/2*x1^2*x3 - x2 + 7" over the given
// variable names. Throws std::invalid_argument with the offending offset.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

// Exact k-th root; throws MathError if p is not a perfect k-th power.
Polynomial exact_root(const Polynomial& p, unsigned k);

// All exponent vectors of the given total degree, largest first.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree);

// Coefficient vector of a homogeneous polynomial against a monomial list.
std::vector<Rational> coefficient_vector(const Polynomial& p, const std::vector<Exponents>& basis);

}  // namespace g1
