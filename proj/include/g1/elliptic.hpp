#pragma once

#include <array>
#include <vector>

#include "g1/model.hpp"
#include "g1/roots.hpp"

namespace g1 {

struct CurvePoint {
  bool infinity = true;
  Rational x, y;

  static CurvePoint zero() { return {}; }
  static CurvePoint affine(const Rational& x, const Rational& y) { return {false, x, y}; }
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, nonsingular.
class EllipticCurve {
 public:
  EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6);
  static EllipticCurve from_coefficients(const std::vector<Rational>& a);
  static EllipticCurve short_form(const Rational& a, const Rational& b) { return {0, 0, 0, a, b}; }

  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }
  std::vector<Rational> coefficients() const { return {a_.begin(), a_.end()}; }
  bool is_short() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }

  bool contains(const CurvePoint& p) const;
  // These throw std::invalid_argument for points off the curve.
  CurvePoint negate(const CurvePoint& p) const;
  CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
  CurvePoint multiply(long n, const CurvePoint& p) const;

  friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;

 private:
  void require_on_curve(const CurvePoint& p) const;
  std::array<Rational, 5> a_;
};

// The standard c4, c6, disc of a Weierstrass equation. Throws MathError if
// the discriminant vanishes.
Invariants weierstrass_invariants(const std::vector<Rational>& a);
Invariants weierstrass_invariants(const EllipticCurve& e);
Rational j_invariant(const EllipticCurve& e);

// y^2 = x^3 - 27 c4 x - 54 c6.
EllipticCurve jacobian_curve(const Invariants& inv);

// (u(x) + v(x) y) / den(x) on a fixed curve, with u, v reduced modulo the
// curve equation (y-degree at most one).
struct FunctionFieldElement {
  Univariate u, v;
  Univariate den = {Rational(1)};

  // Numerator value at an affine point.
  Rational numerator_at(const CurvePoint& p) const;
};

// Product of numerators, reduced by y^2 = x^3 + a2 x^2 + a4 x + a6 - (a1 x + a3) y.
FunctionFieldElement multiply(const EllipticCurve& e, const FunctionFieldElement& f, const FunctionFieldElement& g);
// Pole order at the point at infinity of the numerator u + v y.
int numerator_pole_order(const FunctionFieldElement& f);

// Basis of L((n-1).0 + P) for n = 2..5. For P = 0 this is the monomial basis
// of L(n.0); otherwise g / (x - x_P) for g in L((n+1).0) vanishing at -P.
// Pole bounds are verified before returning.
std::vector<FunctionFieldElement> riemann_roch_basis(const EllipticCurve& e, int n, const CurvePoint& p);

// Model of the image of E under the map given by riemann_roch_basis,
// rescaled so that its invariants equal weierstrass_invariants(E).
GenusOneModel model_from_embedding(const EllipticCurve& e, int n, const CurvePoint& p);

// Unnormalised version of the above, in the coordinates given by the
// basis; degree 2 uses the first two basis elements as (z, x).
GenusOneModel embedded_model(const EllipticCurve& e, int n, const CurvePoint& p);

}  // namespace g1
