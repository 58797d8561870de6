#include "g1/pipeline.hpp"

#include <stdexcept>

#include "g1/covariants.hpp"
#include "g1/degree5.hpp"
#include "g1/hesse.hpp"
#include "g1/roots.hpp"

namespace g1 {

namespace {

Invariants model_invariants(const GenusOneModel& m) { return m.degree() == 5 ? invariants5(m) : invariants(m); }

Invariants from_c4_c6(const Rational& c4, const Rational& c6) { return {c4, c6, (c4 * c4 * c4 - c6 * c6) / 1728}; }

// Degree 2: the twist t with t^2 c4 = c4(E), t^3 c6 = c6(E).
std::optional<Rational> twist_scale(const Invariants& from, const Invariants& to) {
  if ((from.c4 == 0) != (to.c4 == 0) || (from.c6 == 0) != (to.c6 == 0)) return std::nullopt;
  std::optional<Rational> t;
  if (from.c4 == 0 && from.c6 == 0) return std::nullopt;
  if (from.c4 == 0) t = rational_cbrt(to.c6 / from.c6);
  else if (from.c6 == 0) t = rational_sqrt(to.c4 / from.c4);
  else t = (to.c6 / from.c6) / (to.c4 / from.c4);
  if (!t || from.c4 * *t * *t != to.c4 || from.c6 * *t * *t * *t != to.c6) return std::nullopt;
  return t;
}

// Rescales a pencil model with the given invariants so that they become
// those of E; nullopt if no rational rescaling exists.
std::optional<GenusOneModel> normalise(const GenusOneModel& model, const Invariants& have, const Invariants& want) {
  if (model.degree() == 2) {
    auto t = twist_scale(have, want);
    if (!t) return std::nullopt;
    return *t * model;
  }
  auto s = weight_scale(have, want);
  if (!s) return std::nullopt;
  return act(scaling_transformation(model.degree(), *s), model);
}

PencilSearch solve(const GenusOneModel& m, const EllipticCurve& e, Congruence kind) {
  int n = m.degree();
  Invariants inv = model_invariants(m);
  if (inv.disc == 0) throw MathError("the model is singular");
  Invariants target = weierstrass_invariants(e);
  Rational j = target.c4 * target.c4 * target.c4 / target.disc;

  const HessePolynomials& hp = kind == Congruence::direct ? hesse_polynomials(n) : dual_hesse_polynomials(n);
  Polynomial d = specialise(hp.d, inv.c4, inv.c6);
  Polynomial c4 = specialise(hp.c4, inv.c4, inv.c6);
  Polynomial c6 = specialise(hp.c6, inv.c4, inv.c6);
  Rational factor = kind == Congruence::direct
                        ? Rational(j * inv.disc)
                        : power(1728, n - 2) * j * power(inv.disc, n - 1);
  Polynomial form = c4.pow(3) - factor * d.pow(n);
  if (form.is_zero()) throw MathError("the pencil root form vanishes identically");

  GenusOneModel first, second;
  if (kind == Congruence::direct) {
    first = m;
    second = n == 5 ? hessian5(m) : hessian(m);
  } else {
    first = contravariant_p(m);
    second = contravariant_q(m);
  }
  Rational tau = kind == Congruence::direct ? Rational(1) : dual_tau(n);

  PencilSearch out;
  for (const auto& [l, mu] : binary_form_roots(form)) {
    PencilPoint point{l, mu, kind};
    out.roots.push_back(point);
    if (d.evaluate({l, mu}) == 0) continue;  // singular fibre
    Rational pc4 = c4.evaluate({l, mu}) / (tau * tau);
    Rational pc6 = c6.evaluate({l, mu}) / (tau * tau * tau);
    GenusOneModel model = l * first + mu * second;
    auto scaled = normalise(model, from_c4_c6(pc4, pc6), target);
    if (!scaled) continue;
    if (model_invariants(*scaled) != target) throw std::logic_error("pencil model does not have the predicted invariants");
    out.solutions.push_back({point, *scaled});
  }
  return out;
}

}  // namespace

PencilSearch pencil_solve(const GenusOneModel& m, const EllipticCurve& e) { return solve(m, e, Congruence::direct); }

PencilSearch pencil_solve_reverse(const GenusOneModel& m, const EllipticCurve& e) {
  if (m.degree() < 2 || m.degree() > 4) throw std::invalid_argument("reverse pencils are only available in degrees 2, 3, 4");
  return solve(m, e, Congruence::reverse);
}

SyzygeticPolygon syzygetic_ngon(const GenusOneModel& m, const CurvePoint& t) {
  int n = m.degree();
  if (n < 2 || n > 4) throw std::invalid_argument("syzygetic polygons are only available in degrees 2, 3, 4");
  Invariants inv = invariants(m);
  EllipticCurve jac = jacobian_curve(inv);
  if (!jac.contains(t)) throw std::invalid_argument("torsion point is not on the Jacobian");
  for (int k = 1; k < n; ++k)
    if (jac.multiply(k, t).infinity) throw MathError("point has order less than " + std::to_string(n));
  if (!jac.multiply(n, t).infinity) throw MathError("point is not " + std::to_string(n) + "-torsion");

  SyzygeticPolygon out;
  out.data.xi = t.x;
  out.data.torsion = t;
  if (n == 3) out.data.eta_squared = -3 * t.y * t.y;
  if (n == 4) {
    Rational dx = t.x - jac.multiply(2, t).x;
    out.data.eta_squared = -4 * dx * dx * t.y * t.y;
  }
  out.model = t.x * m + Rational(3) * hessian(m);
  return out;
}

EllipticCurve FamilyFibre::curve() const {
  if (singular) throw MathError("singular fibre");
  return EllipticCurve::short_form(a, b);
}

FamilyFibre congruent_family_fibre(const EllipticCurve& e, int n, const PencilPoint& point) {
  if (n < 2 || n > 5) throw std::invalid_argument("n must be 2..5");
  if (point.l == 0 && point.m == 0) throw std::invalid_argument("pencil point (0 : 0)");
  Invariants w = weierstrass_invariants(e);
  Rational c4 = w.c4 / power(6, 4), c6 = w.c6 / power(6, 6);
  Rational C4, C6;
  if (point.kind == Congruence::direct) {
    const auto& hp = hesse_polynomials(n);
    C4 = evaluate_form(hp.c4, c4, c6, point.l, point.m);
    C6 = evaluate_form(hp.c6, c4, c6, point.l, point.m);
  } else {
    const auto& dp = dual_hesse_polynomials(n);
    Rational tau = dual_tau(n);
    C4 = evaluate_form(dp.c4, c4, c6, point.l, point.m) / (tau * tau);
    C6 = evaluate_form(dp.c6, c4, c6, point.l, point.m) / (tau * tau * tau);
  }
  FamilyFibre f;
  f.a = -27 * C4;
  f.b = -54 * C6;
  f.singular = C4 * C4 * C4 == C6 * C6;
  f.special_j = c4 == 0 || c6 == 0;
  return f;
}

FamilyFibre rubin_silverberg_fibre(const EllipticCurve& e, int n, const Rational& t, Congruence kind) {
  if (!e.is_short()) throw std::invalid_argument("curve must be given as y^2 = x^3 + a x + b");
  if (kind == Congruence::reverse && n != 3) throw std::invalid_argument("reverse family only for n = 3");
  const auto& rs = rubin_silverberg_polynomials(n);
  const Rational &a = e.a4(), &b = e.a6();
  Rational J = 4 * a * a * a / (4 * a * a * a + 27 * b * b);
  FamilyFibre f;
  if (kind == Congruence::direct) {
    f.a = rs.alpha.evaluate({J, t}) * a;
    f.b = rs.beta.evaluate({J, t}) * b;
  } else {
    f.a = -4 * rs.gamma.evaluate({J, t}) * J * a;
    f.b = -8 * rs.beta.evaluate({J, t}) * J * J * b;
  }
  f.singular = 4 * f.a * f.a * f.a + 27 * f.b * f.b == 0;
  f.special_j = a == 0 || b == 0;
  return f;
}

VisibilityResult visible_element(const EllipticCurve& e, const EllipticCurve& f, const CurvePoint& p, int n,
                                 Congruence kind) {
  if (n == 5) kind = Congruence::direct;
  VisibilityResult out;
  out.degree = n;
  out.kind = kind;
  out.point = p;
  out.invariants = weierstrass_invariants(e);
  out.embedded = model_from_embedding(f, n, p);
  PencilSearch search = kind == Congruence::direct ? pencil_solve(out.embedded, e) : pencil_solve_reverse(out.embedded, e);
  if (search.solutions.empty()) {
    std::string roots;
    for (const auto& r : search.roots) roots += " (" + to_string(r.l) + ":" + to_string(r.m) + ")";
    throw MathError("no pencil point gives the invariants of E; rational roots:" + (roots.empty() ? std::string(" none") : roots));
  }
  out.solutions = std::move(search.solutions);
  return out;
}

}  // namespace g1
