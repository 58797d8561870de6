#include "g1/elliptic.hpp"

#include <climits>
#include <stdexcept>

#include "g1/covariants.hpp"
#include "g1/degree5.hpp"

namespace g1 {

namespace {

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate add(Univariate a, const Univariate& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Univariate scale(Univariate a, const Rational& s) {
  for (auto& c : a) c *= s;
  trim(a);
  return a;
}

Univariate mul(const Univariate& a, const Univariate& b) {
  if (a.empty() || b.empty()) return {};
  Univariate r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact quotient a / b; throws MathError on a nonzero remainder.
Univariate divide(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (a.size() < b.size()) {
    if (a.empty()) return {};
    throw MathError("inexact polynomial division");
  }
  Univariate q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = a[k + b.size() - 1] / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
  }
  trim(a);
  if (!a.empty()) throw MathError("inexact polynomial division");
  trim(q);
  return q;
}

int degree(const Univariate& p) {
  Univariate t = p;
  trim(t);
  return static_cast<int>(t.size()) - 1;
}

// Basis of L(k.0): x^i y^j with j <= 1 and 2i + 3j <= k, by pole order.
std::vector<FunctionFieldElement> monomial_basis(int k) {
  std::vector<FunctionFieldElement> out;
  for (int pole = 0; pole <= k; ++pole) {
    if (pole == 1) continue;
    FunctionFieldElement f;
    if (pole % 2 == 0) {
      f.u.assign(pole / 2 + 1, Rational(0));
      f.u.back() = 1;
    } else {
      f.v.assign((pole - 3) / 2 + 1, Rational(0));
      f.v.back() = 1;
    }
    out.push_back(f);
  }
  return out;
}

FunctionFieldElement combine(const std::vector<FunctionFieldElement>& fs, const Vector& c) {
  FunctionFieldElement r;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    r.u = add(r.u, scale(fs[i].u, c[i]));
    r.v = add(r.v, scale(fs[i].v, c[i]));
  }
  return r;
}

// Numerator of f rewritten over the given denominator, as one coefficient
// vector (u coefficients then v coefficients, padded to `width` each).
Vector coefficients_over(const FunctionFieldElement& f, const Univariate& den, std::size_t width) {
  Univariate factor = divide(den, f.den);
  Univariate u = mul(f.u, factor), v = mul(f.v, factor);
  if (u.size() > width || v.size() > width) throw std::logic_error("coefficient width too small");
  Vector out(2 * width, Rational(0));
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i];
  for (std::size_t i = 0; i < v.size(); ++i) out[width + i] = v[i];
  return out;
}

// Linear relations among elements sharing the denominator `den`.
std::vector<Vector> relations(const std::vector<FunctionFieldElement>& fs, const Univariate& den) {
  std::size_t width = 1;
  for (const auto& f : fs) {
    int extra = degree(den) - degree(f.den);
    width = std::max({width, f.u.size() + extra, f.v.size() + extra});
  }
  RationalMatrix m(2 * width, fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    Vector c = coefficients_over(fs[j], den, width);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
  }
  return m.nullspace();
}

Univariate power_of(const Univariate& p, int k) {
  Univariate r = {Rational(1)};
  for (int i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

FunctionFieldElement product(const EllipticCurve& e, const std::vector<FunctionFieldElement>& basis,
                             const Exponents& exps) {
  FunctionFieldElement r;
  r.u = {Rational(1)};
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < exps[i]; ++k) r = multiply(e, r, basis[i]);
  return r;
}

Polynomial relation_polynomial(std::size_t nvars, const std::vector<Exponents>& mons, const Vector& c) {
  Polynomial p(nvars);
  for (std::size_t i = 0; i < mons.size(); ++i) p.add_term(mons[i], c[i]);
  return p;
}

GenusOneModel quartic_from_embedding(const EllipticCurve& e, const CurvePoint& p) {
  auto basis = riemann_roch_basis(e, 2, p);
  auto wider = riemann_roch_basis(e, 3, p);
  // w in L(2.0 + P) outside L(0 + P); all these share one denominator.
  const FunctionFieldElement* w = nullptr;
  for (const auto& cand : wider) {
    if (relations({basis[0], basis[1], cand}, cand.den).empty()) {
      w = &cand;
      break;
    }
  }
  if (!w) throw MathError("no function in L(2.0 + P) outside L(0 + P)");
  const auto& xf = basis[1];
  const auto& zf = basis[0];
  // Relation among X^4, X^3 Z, ..., Z^4, w X^2, w X Z, w Z^2, w^2.
  std::vector<FunctionFieldElement> terms;
  for (int i = 4; i >= 0; --i) {
    FunctionFieldElement t;
    t.u = {Rational(1)};
    for (int k = 0; k < i; ++k) t = multiply(e, t, xf);
    for (int k = i; k < 4; ++k) t = multiply(e, t, zf);
    terms.push_back(t);
  }
  for (int i = 2; i >= 0; --i) {
    FunctionFieldElement t = *w;
    for (int k = 0; k < i; ++k) t = multiply(e, t, xf);
    for (int k = i; k < 2; ++k) t = multiply(e, t, zf);
    terms.push_back(t);
  }
  terms.push_back(multiply(e, *w, *w));
  Univariate den = power_of(xf.den, 4);
  auto rel = relations(terms, den);
  if (rel.size() != 1) throw MathError("expected a unique quartic relation, found " + std::to_string(rel.size()));
  const Vector& c = rel[0];
  if (c[8] == 0) throw MathError("quartic relation does not involve w^2");
  // c8 w^2 + A(X,Z) w + B(X,Z) = 0  =>  (2 c8 w + A)^2 = A^2 - 4 c8 B.
  Polynomial x = Polynomial::variable(2, 0), z = Polynomial::variable(2, 1);
  Polynomial a = c[5] * x * x + c[6] * x * z + c[7] * z * z;
  Polynomial b(2);
  for (int i = 0; i <= 4; ++i) b += c[i] * x.pow(4 - i) * z.pow(i);
  Polynomial quartic = Rational(1) / (4 * c[8] * c[8]) * (a * a - 4 * c[8] * b);
  return GenusOneModel::quartic(quartic);
}

}  // namespace

EllipticCurve::EllipticCurve(Rational a1, Rational a2, Rational a3, Rational a4, Rational a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  weierstrass_invariants(coefficients());
}

EllipticCurve EllipticCurve::from_coefficients(const std::vector<Rational>& a) {
  if (a.size() != 5) throw std::invalid_argument("a Weierstrass equation needs five coefficients");
  return {a[0], a[1], a[2], a[3], a[4]};
}

bool EllipticCurve::contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  const Rational &x = p.x, &y = p.y;
  return y * y + a1() * x * y + a3() * y == x * x * x + a2() * x * x + a4() * x + a6();
}

void EllipticCurve::require_on_curve(const CurvePoint& p) const {
  if (!contains(p)) throw std::invalid_argument("point (" + to_string(p.x) + ", " + to_string(p.y) + ") is not on the curve");
}

CurvePoint EllipticCurve::negate(const CurvePoint& p) const {
  require_on_curve(p);
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - a1() * p.x - a3());
}

CurvePoint EllipticCurve::add(const CurvePoint& p, const CurvePoint& q) const {
  require_on_curve(p);
  require_on_curve(q);
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rational lambda, nu;
  if (p.x == q.x) {
    if (p.y + q.y + a1() * q.x + a3() == 0) return CurvePoint::zero();
    Rational den = 2 * p.y + a1() * p.x + a3();
    lambda = (3 * p.x * p.x + 2 * a2() * p.x + a4() - a1() * p.y) / den;
    nu = (-p.x * p.x * p.x + a4() * p.x + 2 * a6() - a3() * p.y) / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
    nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
  }
  Rational x = lambda * lambda + a1() * lambda - a2() - p.x - q.x;
  Rational y = -(lambda + a1()) * x - nu - a3();
  return CurvePoint::affine(x, y);
}

CurvePoint EllipticCurve::multiply(long n, const CurvePoint& p) const {
  require_on_curve(p);
  CurvePoint base = n < 0 ? negate(p) : p;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  CurvePoint acc = CurvePoint::zero();
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

Invariants weierstrass_invariants(const std::vector<Rational>& a) {
  if (a.size() != 5) throw std::invalid_argument("a Weierstrass equation needs five coefficients");
  const Rational &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  Rational b2 = a1 * a1 + 4 * a2;
  Rational b4 = 2 * a4 + a1 * a3;
  Rational b6 = a3 * a3 + 4 * a6;
  Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  Invariants inv;
  inv.c4 = b2 * b2 - 24 * b4;
  inv.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  inv.disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (inv.disc == 0) throw MathError("singular Weierstrass equation");
  return inv;
}

Invariants weierstrass_invariants(const EllipticCurve& e) { return weierstrass_invariants(e.coefficients()); }

Rational j_invariant(const EllipticCurve& e) {
  auto inv = weierstrass_invariants(e);
  return inv.c4 * inv.c4 * inv.c4 / inv.disc;
}

EllipticCurve jacobian_curve(const Invariants& inv) {
  if (inv.c4 * inv.c4 * inv.c4 == inv.c6 * inv.c6) throw MathError("singular invariants");
  return EllipticCurve::short_form(-27 * inv.c4, -54 * inv.c6);
}

Rational FunctionFieldElement::numerator_at(const CurvePoint& p) const {
  if (p.infinity) throw std::invalid_argument("numerator evaluated at the point at infinity");
  return evaluate(u, p.x) + evaluate(v, p.x) * p.y;
}

FunctionFieldElement multiply(const EllipticCurve& e, const FunctionFieldElement& f, const FunctionFieldElement& g) {
  // y^2 = rhs - h y with rhs = x^3 + a2 x^2 + a4 x + a6 and h = a1 x + a3.
  Univariate rhs = {e.a6(), e.a4(), e.a2(), Rational(1)};
  Univariate h = {e.a3(), e.a1()};
  trim(h);
  Univariate vv = mul(f.v, g.v);
  FunctionFieldElement r;
  r.u = add(mul(f.u, g.u), mul(vv, rhs));
  r.v = add(add(mul(f.u, g.v), mul(f.v, g.u)), scale(mul(vv, h), -1));
  r.den = mul(f.den, g.den);
  return r;
}

int numerator_pole_order(const FunctionFieldElement& f) {
  int du = degree(f.u), dv = degree(f.v);
  int pole = INT_MIN;
  if (du >= 0) pole = 2 * du;
  if (dv >= 0) pole = std::max(pole, 2 * dv + 3);
  return pole;
}

std::vector<FunctionFieldElement> riemann_roch_basis(const EllipticCurve& e, int n, const CurvePoint& p) {
  if (n < 2 || n > 5) throw std::invalid_argument("embedding degree must be 2..5");
  if (!e.contains(p)) throw std::invalid_argument("point is not on the curve");
  if (p.infinity) return monomial_basis(n);

  CurvePoint minus = e.negate(p);
  auto big = monomial_basis(n + 1);
  RationalMatrix cond(1, big.size());
  for (std::size_t i = 0; i < big.size(); ++i) cond(0, i) = big[i].numerator_at(minus);
  auto kernel = cond.nullspace();
  if (kernel.size() != static_cast<std::size_t>(n)) throw MathError("Riemann-Roch space has the wrong dimension");

  // div(x - x_P) = P + (-P) - 2.0, so g / (x - x_P) has at most a simple pole
  // at P and none at -P once g(-P) = 0. When P = -P the divisor is 2P - 2.0
  // and g(P) = 0 again leaves at most a simple pole at P.
  Univariate den = {-p.x, Rational(1)};
  std::vector<FunctionFieldElement> out;
  for (const auto& c : kernel) {
    FunctionFieldElement f = combine(big, c);
    f.den = den;
    if (numerator_pole_order(f) - 2 > n - 1) throw MathError("pole order at infinity exceeds n - 1");
    if (f.numerator_at(minus) != 0) throw MathError("basis function has a pole at -P");
    out.push_back(std::move(f));
  }
  return out;
}

GenusOneModel embedded_model(const EllipticCurve& e, int n, const CurvePoint& p) {
  if (n == 2) return quartic_from_embedding(e, p);
  auto basis = riemann_roch_basis(e, n, p);
  int d = n == 3 ? 3 : 2;
  auto mons = monomials_of_degree(static_cast<std::size_t>(n), d);
  std::vector<FunctionFieldElement> terms;
  for (const auto& m : mons) terms.push_back(product(e, basis, m));
  Univariate den = power_of(basis[0].den, d);
  auto rel = relations(terms, den);
  std::size_t expected = n == 3 ? 1 : n == 4 ? 2 : 5;
  if (rel.size() != expected)
    throw MathError("expected " + std::to_string(expected) + " relations, found " + std::to_string(rel.size()));
  std::vector<Polynomial> eqs;
  for (const auto& c : rel) eqs.push_back(relation_polynomial(static_cast<std::size_t>(n), mons, c));
  if (n == 3) return GenusOneModel::cubic(eqs[0]);
  if (n == 4) return GenusOneModel::quadrics(eqs[0], eqs[1]);
  return model_from_quadric_basis(eqs);
}

GenusOneModel model_from_embedding(const EllipticCurve& e, int n, const CurvePoint& p) {
  GenusOneModel raw = embedded_model(e, n, p);
  Invariants have = n == 5 ? invariants5(raw) : invariants(raw);
  Invariants want = weierstrass_invariants(e);
  auto s = weight_scale(have, want);
  if (!s) throw MathError("normalisation scalar is not rational");
  return act(scaling_transformation(n, *s), raw);
}

}  // namespace g1
