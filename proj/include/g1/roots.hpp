#pragma once

#include <utility>
#include <vector>

#include "g1/polynomial.hpp"
#include "g1/rational.hpp"

namespace g1 {

// Univariate polynomials are coefficient vectors, constant term first.
using Univariate = std::vector<Rational>;

Rational evaluate(const Univariate& p, const Rational& x);

// Distinct rational roots in increasing order. Throws std::invalid_argument
// on the zero polynomial.
std::vector<Rational> rational_roots(const Univariate& p);

// Univariate coefficients of a polynomial in one variable (or in one
// variable of a larger ring, all others absent).
Univariate to_univariate(const Polynomial& p, std::size_t var);

// Rational points (l : m) of a binary form F(l, m), each as a primitive
// integer pair with m > 0, or (1, 0).
std::vector<std::pair<Rational, Rational>> binary_form_roots(const Polynomial& form);

// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Univariate interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace g1
