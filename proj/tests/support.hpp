#pragma once

#include <random>
#include <vector>

#include "g1/matrix.hpp"
#include "g1/model.hpp"
#include "g1/polynomial.hpp"
#include "g1/roots.hpp"

namespace testsupport {

using g1::Integer;
using g1::Polynomial;
using g1::Rational;

inline Rational random_rational(std::mt19937& rng, int range = 9, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero(std::mt19937& rng, int range = 9, int max_den = 3) {
  for (;;) {
    Rational q = random_rational(rng, range, max_den);
    if (q != 0) return q;
  }
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t nvars, int max_degree, int terms) {
  Polynomial p(nvars);
  std::uniform_int_distribution<int> exp(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    g1::Exponents e(nvars);
    for (auto& k : e) k = exp(rng);
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline g1::RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range = 5) {
  g1::RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, range, 1);
  return m;
}

inline g1::RationalMatrix random_invertible(std::mt19937& rng, std::size_t n, int range = 3) {
  for (;;) {
    auto m = random_matrix(rng, n, n, range);
    if (m.determinant() != 0) return m;
  }
}

// Plain cofactor expansion along the first row, no memoisation.
inline Polynomial cofactor_determinant(const g1::PolyMatrix& m) {
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial total(m.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    g1::PolyMatrix minor(n - 1, n - 1, m.nvars());
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Polynomial t = m(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0) total += t;
    else total -= t;
  }
  return total;
}

// Rank by textbook elimination over Q with first-nonzero pivoting.
inline std::size_t naive_rank(g1::RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      Rational k = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= k * m(r, j);
    }
    ++r;
  }
  return r;
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Candidate enumeration +-(divisors of trailing)/(divisors of leading) on
// integer-coefficient input, tested by exact evaluation.
inline std::vector<Rational> divisor_roots(const g1::Univariate& p) {
  std::vector<Rational> out;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) out.emplace_back(0);
  Integer lead = p.back().get_num(), trail = p[low].get_num();
  for (const auto& u : divisors(trail))
    for (const auto& v : divisors(lead))
      for (int s : {1, -1}) {
        Rational q(u * s, v);
        q.canonicalize();
        if (g1::evaluate(p, q) == 0) out.push_back(q);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline g1::GenusOneModel random_model(std::mt19937& rng, int degree, int range = 5) {
  std::vector<Rational> c(g1::coefficient_count(degree));
  for (auto& v : c) v = random_rational(rng, range, 1);
  return g1::GenusOneModel::from_coefficients(degree, c);
}

inline g1::Transformation random_transformation(std::mt19937& rng, int degree) {
  std::size_t nb = g1::variable_count(degree);
  auto b = random_invertible(rng, nb, 2);
  if (degree <= 3) return g1::Transformation::scalar_matrix(degree, random_nonzero(rng, 3, 2), b);
  return g1::Transformation::matrix_pair(degree, random_invertible(rng, degree == 4 ? 2 : 5, 2), b);
}

}  // namespace testsupport
