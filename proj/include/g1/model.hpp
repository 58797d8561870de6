#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g1/matrix.hpp"
#include "g1/polynomial.hpp"
#include "g1/rational.hpp"

namespace g1 {

// c4^3 - c6^2 = 1728 disc.
struct Invariants {
  Rational c4, c6, disc;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

// Genus one model of degree n = 2..5. Coefficients are stored flat:
//   2: quartic a..e on x^4, x^3z, ..., z^4
//   3: cubic on x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
//   4: upper triangles (row-major) of A then B, quadrics 1/2 x^T A x
//   5: ten rows (12,13,14,15,23,24,25,34,35,45) of five x_k coefficients
class GenusOneModel {
 public:
  GenusOneModel() = default;
  static GenusOneModel zero(int degree);
  static GenusOneModel from_coefficients(int degree, std::vector<Rational> coeffs);
  static GenusOneModel quartic(const Polynomial& f);
  static GenusOneModel cubic(const Polynomial& f);
  static GenusOneModel quadrics(const RationalMatrix& a, const RationalMatrix& b);
  static GenusOneModel quadrics(const Polynomial& q1, const Polynomial& q2);
  // From the upper-triangle linear forms m_ij (i < j), in row order.
  static GenusOneModel alternating(const std::vector<Polynomial>& upper);

  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  // Degree 4: matrix of quadric k (0 or 1).
  RationalMatrix quadric_matrix(int k) const;
  // Degree 5: the alternating matrix of linear forms in x1..x5.
  PolyMatrix alternating_matrix() const;
  // Degree 5: constant alternating matrix multiplying x_k.
  RationalMatrix alternating_slice(int k) const;

  GenusOneModel& operator+=(const GenusOneModel& other);
  friend GenusOneModel operator+(GenusOneModel a, const GenusOneModel& b) { return a += b; }
  friend GenusOneModel operator-(GenusOneModel a, const GenusOneModel& b) {
    return a += Rational(-1) * b;
  }
  friend GenusOneModel operator*(const Rational& s, GenusOneModel m);
  friend bool operator==(const GenusOneModel& a, const GenusOneModel& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

std::size_t coefficient_count(int degree);
std::size_t variable_count(int degree);
std::vector<std::string> variable_names(int degree);
// Index pairs (i, j), i < j, in storage order.
const std::array<std::pair<int, int>, 10>& alternating_pairs();

// Group element acting by x -> xB:
//   2: f -> scalar^2 f((x,z)B)    3: F -> scalar F(xB)
//   4: (q1,q2) -> A (q1(xB), q2(xB))    5: phi -> A phi(xB) A^T
struct Transformation {
  int degree = 0;
  Rational scalar = 1;  // degrees 2, 3
  RationalMatrix a;     // degrees 4, 5
  RationalMatrix b;

  static Transformation identity(int degree);
  static Transformation scalar_matrix(int degree, const Rational& scalar, const RationalMatrix& b);
  static Transformation matrix_pair(int degree, const RationalMatrix& a, const RationalMatrix& b);
  Transformation transpose() const;
  Transformation inverse() const;
};

// g * h, so that act(g * h, m) = act(g, act(h, m)).
Transformation compose(const Transformation& g, const Transformation& h);
Rational det_character(const Transformation& g);
GenusOneModel act(const Transformation& g, const GenusOneModel& m);

// A transformation with det_character equal to s: scalar s for degrees 2
// and 3, A = diag(s, 1) for degree 4, B = diag(s, 1, 1, 1, 1) for degree 5.
Transformation scaling_transformation(int degree, const Rational& s);

// The positive rational s with s^4 from.c4 = to.c4 and s^6 from.c6 = to.c6,
// if there is one.
std::optional<Rational> weight_scale(const Invariants& from, const Invariants& to);

// Degree 2: quartic in (x, z); 3: cubic in (x, y, z); 4: two quadrics;
// 5: the five Pfaffian quadrics.
std::vector<Polynomial> equations(const GenusOneModel& m);
// Degree 2, 3: the defining form; 4: the two quadrics; 5: the ten entries.
std::vector<Polynomial> components(const GenusOneModel& m);

// f(d/dx) g for forms of equal degree.
Rational apolar_pairing(const Polynomial& f, const Polynomial& g);
Rational pairing(const GenusOneModel& m1, const GenusOneModel& m2);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

GenusOneModel parse_model(std::string_view text);
std::string serialize_model(const GenusOneModel& m);

}  // namespace g1
