#include "doctest.h"
#include "fixtures.hpp"
#include "g1/covariants.hpp"
#include "g1/degree5.hpp"
#include "g1/elliptic.hpp"
#include "support.hpp"

using namespace g1;

namespace {

EllipticCurve curve(const fixtures::CurveData& c) { return EllipticCurve::from_coefficients(c.a); }

CurvePoint pt(long x, long y) { return CurvePoint::affine(x, y); }

bool on_curve(const EllipticCurve& e, const CurvePoint& p) {
  if (p.infinity) return true;
  const Rational &x = p.x, &y = p.y;
  return y * y + e.a1() * x * y + e.a3() * y == x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
}

// Chord through distinct points with distinct x, written out directly.
CurvePoint chord_sum(const EllipticCurve& e, const CurvePoint& p, const CurvePoint& q) {
  Rational l = (q.y - p.y) / (q.x - p.x);
  Rational x3 = l * l + e.a1() * l - e.a2() - p.x - q.x;
  Rational y3 = -(l + e.a1()) * x3 - (p.y - l * p.x) - e.a3();
  return CurvePoint::affine(x3, y3);
}

int poly_degree(const Univariate& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Pole order at 0_E of (u + v y)/den: x and y have poles of orders 2 and 3.
int pole_at_infinity(const FunctionFieldElement& f) {
  int du = poly_degree(f.u), dv = poly_degree(f.v);
  int num = std::max(du < 0 ? -100 : 2 * du, dv < 0 ? -100 : 2 * dv + 3);
  return num - 2 * poly_degree(f.den);
}

Rational value(const FunctionFieldElement& f, const CurvePoint& p) {
  return f.numerator_at(p) / evaluate(f.den, p.x);
}

// Small combinations i P1 + j P2 that avoid 0, P and -P.
std::vector<CurvePoint> sample_points(const EllipticCurve& e, const std::vector<CurvePoint>& gens, const CurvePoint& p) {
  std::vector<CurvePoint> out;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      CurvePoint q = e.add(e.multiply(i, gens[0]), e.multiply(j, gens[1]));
      if (q.infinity || (!p.infinity && q.x == p.x)) continue;
      out.push_back(q);
    }
  return out;
}

std::vector<CurvePoint> generators(const fixtures::Example& ex) {
  std::vector<CurvePoint> out;
  for (const auto& [x, y] : ex.points) out.push_back(CurvePoint::affine(x, y));
  return out;
}

Invariants model_invariants(const GenusOneModel& m) { return m.degree() == 5 ? invariants5(m) : invariants(m); }

}  // namespace

TEST_CASE("group law") {
  auto f571 = EllipticCurve::from_coefficients(fixtures::ints({0, 1, 1, -4, 2}));
  CurvePoint p1 = pt(0, 1), p2 = pt(1, 0);
  CHECK(f571.add(p1, CurvePoint::zero()) == p1);
  CHECK(f571.add(CurvePoint::zero(), p2) == p2);
  CurvePoint s = f571.add(p1, p2);
  CHECK(on_curve(f571, s));
  CHECK(s == chord_sum(f571, p1, p2));
  CHECK(f571.add(p1, f571.negate(p1)).infinity);

  auto e = EllipticCurve::short_form(0, 11664);
  CurvePoint t = pt(0, 108);
  CHECK(!e.multiply(2, t).infinity);
  CHECK(e.multiply(3, t).infinity);
  CHECK(e.multiply(-1, t) == e.negate(t));

  // Sampled associativity and commutativity on 2006d1.
  auto f = EllipticCurve::from_coefficients(fixtures::ints({1, 1, 0, -88, 284}));
  std::vector<CurvePoint> pts = {pt(-10, 22), pt(2, 10), f.multiply(2, pt(-10, 22)), f.add(pt(-10, 22), pt(2, 10))};
  for (const auto& a : pts)
    for (const auto& b : pts) {
      CHECK(f.add(a, b) == f.add(b, a));
      for (const auto& c : pts) CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    }
  CHECK(f.multiply(5, pts[0]) == f.add(f.multiply(2, pts[0]), f.multiply(3, pts[0])));

  CHECK_THROWS_AS(f571.add(pt(1, 1), p1), std::invalid_argument);
  CHECK_THROWS_AS(f571.negate(pt(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(EllipticCurve::short_form(0, 0), MathError);
}

TEST_CASE("weierstrass invariants and jacobians") {
  auto inv = weierstrass_invariants(EllipticCurve::short_form(0, 1));
  CHECK(inv.c4 == 0);
  CHECK(inv.c6 == -864);

  // The quartic comes from embedding 571b1, so that is its Jacobian; 571a1
  // is only 2-congruent to it.
  auto e571 = EllipticCurve::from_coefficients(fixtures::ints({0, -1, 1, -929, -10595}));
  auto f571 = EllipticCurve::from_coefficients(fixtures::ints({0, 1, 1, -4, 2}));
  auto jac = jacobian_curve({3328, -202240, -2338816});
  CHECK(jac == EllipticCurve::short_form(-89856, 10920960));
  CHECK(j_invariant(jac) == j_invariant(f571));
  CHECK(j_invariant(jac) != j_invariant(e571));

  CHECK(jacobian_curve({0, -216, -27}) == EllipticCurve::short_form(0, 11664));

  auto e1058 = EllipticCurve::from_coefficients(fixtures::ints({1, -1, 0, -332311, -73733731}));
  auto f1058 = EllipticCurve::from_coefficients(fixtures::ints({1, 0, 1, 0, 2}));
  CHECK(j_invariant(jacobian_curve({-23, -1909, -2116})) == j_invariant(f1058));
  CHECK(j_invariant(e1058) != j_invariant(f1058));

  // Jacobian has invariants 6^4 c4, 6^6 c6.
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    Rational c4 = testsupport::random_rational(rng), c6 = testsupport::random_rational(rng);
    if (c4 * c4 * c4 == c6 * c6) continue;
    Invariants given{c4, c6, (c4 * c4 * c4 - c6 * c6) / 1728};
    auto w = weierstrass_invariants(jacobian_curve(given));
    CHECK(w.c4 == 1296 * c4);
    CHECK(w.c6 == 46656 * c6);
    CHECK(j_invariant(jacobian_curve(given)) == c4 * c4 * c4 / given.disc);
  }
  CHECK_THROWS_AS(jacobian_curve({1, 1, 0}), MathError);
}

TEST_CASE("Riemann-Roch bases") {
  auto f = EllipticCurve::from_coefficients(fixtures::ints({1, 1, 0, -88, 284}));
  auto b2 = riemann_roch_basis(f, 2, CurvePoint::zero());
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].u == Univariate{1});
  CHECK(b2[1].u == Univariate{0, 1});

  std::vector<CurvePoint> others = {pt(2, 10), pt(-10, 22), f.multiply(2, pt(2, 10)), f.multiply(3, pt(-10, 22)),
                                    f.add(pt(2, 10), pt(-10, 22)), f.multiply(-2, pt(2, 10)),
                                    f.add(pt(2, 10), f.multiply(2, pt(-10, 22)))};
  for (const auto& p : {CurvePoint::zero(), pt(-10, 22), pt(2, 10), f.multiply(2, pt(-10, 22))})
    for (int n = 2; n <= 5; ++n) {
      auto basis = riemann_roch_basis(f, n, p);
      REQUIRE(basis.size() == static_cast<std::size_t>(n));
      for (const auto& g : basis) {
        CHECK(pole_at_infinity(g) <= (p.infinity ? n : n - 1));
        // The only other possible pole is where x = x_P; the numerator must
        // vanish at -P so that only P remains.
        if (!p.infinity) CHECK(g.numerator_at(f.negate(p)) == 0);
      }
      // Independence by evaluation at points away from 0 and P.
      RationalMatrix values(basis.size(), others.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < others.size(); ++j)
          if (p.infinity || others[j].x != p.x) values(i, j) = value(basis[i], others[j]);
      CHECK(values.rank() == basis.size());
    }

  // Products land in the doubled space.
  auto p = pt(-10, 22);
  auto basis = riemann_roch_basis(f, 3, p);
  auto square = multiply(f, basis[1], basis[2]);
  CHECK(pole_at_infinity(square) <= 4);
  CHECK(square.numerator_at(f.negate(p)) == 0);

  CHECK_THROWS_AS(riemann_roch_basis(f, 6, p), std::invalid_argument);
  CHECK_THROWS_AS(riemann_roch_basis(f, 3, pt(1, 1)), std::invalid_argument);
}

TEST_CASE("Riemann-Roch at a 2-torsion point") {
  // y^2 = x^3 - x has (0,0) of order 2.
  auto e = EllipticCurve::short_form(-1, 0);
  for (int n = 2; n <= 5; ++n) {
    auto basis = riemann_roch_basis(e, n, pt(0, 0));
    CHECK(basis.size() == static_cast<std::size_t>(n));
    auto m = model_from_embedding(e, n, pt(0, 0));
    auto inv = model_invariants(m);
    CHECK(inv.c4 == weierstrass_invariants(e).c4);
    CHECK(inv.c6 == weierstrass_invariants(e).c6);
  }
}

TEST_CASE("embedded models contain the image") {
  for (const auto& ex : fixtures::examples()) {
    CAPTURE(ex.label);
    auto f = curve(ex.f);
    auto gens = generators(ex);
    std::vector<CurvePoint> bases = {CurvePoint::zero(), gens[0]};
    for (const auto& p : bases) {
      auto m = embedded_model(f, ex.degree, p);
      auto basis = riemann_roch_basis(f, ex.degree, p);
      auto pts = sample_points(f, gens, p);
      REQUIRE(pts.size() >= 10);
      for (const auto& q : pts) {
        std::vector<Rational> image;
        for (const auto& g : basis) image.push_back(value(g, q));
        if (ex.degree == 2) {
          Rational w = equations(m)[0].evaluate({image[1], image[0]});
          CHECK(rational_sqrt(w).has_value());
          continue;
        }
        for (const auto& eq : equations(m)) CHECK(eq.evaluate(image) == 0);
      }
    }
  }
}

TEST_CASE("embedding invariants equal those of the curve") {
  for (const auto& ex : fixtures::examples()) {
    CAPTURE(ex.label);
    auto f = curve(ex.f);
    auto want = weierstrass_invariants(f);
    std::vector<CurvePoint> bases = {CurvePoint::zero()};
    for (const auto& q : generators(ex)) bases.push_back(q);
    for (const auto& p : bases) {
      auto inv = model_invariants(model_from_embedding(f, ex.degree, p));
      CHECK(inv.c4 == want.c4);
      CHECK(inv.c6 == want.c6);
      CHECK(inv.disc == want.disc);
    }
    // The printed models are F's invariants up to weight scaling.
    auto scale = weight_scale(want, {ex.c4, ex.c6, ex.disc});
    REQUIRE(scale.has_value());
    CHECK(*scale == (ex.label == "571" ? 2 : 1));
  }
}
