#include "doctest.h"
#include "fixtures.hpp"
#include "g1/hesse.hpp"
#include "support.hpp"

using namespace g1;

namespace {

const std::vector<std::string> kAB = {"a", "b"};
const std::vector<std::string> kPencil = {"l", "m", "c4", "c6"};

Polynomial ab(const std::string& s) { return parse_polynomial(s, kAB); }
Polynomial pencil(const std::string& s) { return parse_polynomial(s, kPencil); }

DiscreteCovariant scale(const Polynomial& f, const DiscreteCovariant& p) { return {f * p.first, f * p.second}; }
DiscreteCovariant sum(const DiscreteCovariant& p, const DiscreteCovariant& q) {
  return {p.first + q.first, p.second + q.second};
}
bool same(const DiscreteCovariant& p, const DiscreteCovariant& q) {
  return p.first == q.first && p.second == q.second;
}

Polynomial constant(std::size_t nvars, const Rational& c) { return Polynomial(nvars, c); }

}  // namespace

TEST_CASE("klein forms for n = 2") {
  auto k = klein_forms(2);
  CHECK(k.d == ab("64*a^3 - a*b^2"));
  CHECK(k.c4 == ab("192*a^2 + b^2"));
  CHECK(k.c6 == ab("576*a^2*b - b^3"));
  auto partial = discrete_partial(k.d);
  CHECK(partial.first == ab("2*a*b"));
  CHECK(partial.second == ab("192*a^2 - b^2"));
}

TEST_CASE("klein forms for n = 3 at (1, 0)") {
  auto k = klein_forms(3);
  CHECK(k.c4.evaluate({1, 0}) == 0);
  CHECK(k.c6.evaluate({1, 0}) == 5832);
  CHECK_THROWS_AS(klein_forms(6), std::invalid_argument);
}

TEST_CASE("klein form identities") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    auto k = klein_forms(n);
    CHECK(k.d.total_degree() == klein_degree(n));
    CHECK(k.c4.total_degree() == klein_c4_degree(n));
    CHECK(k.c6.total_degree() == klein_c6_degree(n));
    CHECK(k.c4.pow(3) - k.c6.pow(2) == Rational(1728) * k.d.pow(n));

    auto dD = discrete_partial(k.d), dc4 = discrete_partial(k.c4), dc6 = discrete_partial(k.c6);
    auto u = discrete_identity();
    auto c = [](long v) { return constant(2, v); };
    CHECK(bracket(dD, dc4) == Rational(klein_c4_degree(n)) * k.c6);
    CHECK(bracket(dD, dc6) == Rational(klein_c6_degree(n)) * k.c4.pow(2));
    CHECK(same(scale(c(3) * k.d, dc4), sum(scale(c(-n) * k.c6, u), scale(c(n) * k.c4, dD))));
    CHECK(same(scale(c(2) * k.d, dc6), sum(scale(c(-n) * k.c4.pow(2), u), scale(c(n) * k.c6, dD))));
    CHECK(same(scale(c(1728 * n) * k.d.pow(n - 1), u), sum(scale(c(3) * k.c6, dc4), scale(c(-2) * k.c4, dc6))));
    CHECK(same(scale(c(1728 * n) * k.d.pow(n - 1), dD),
               sum(scale(c(3) * k.c4.pow(2), dc4), scale(c(-2) * k.c6, dc6))));
    // Euler and alternation.
    CHECK(bracket(u, dD) == Rational(klein_degree(n)) * k.d);
    CHECK(bracket(dc4, dc4).is_zero());
  }
}

TEST_CASE("hesse models") {
  CHECK(hesse_model(2, 3, 8).coefficients() == (std::vector<Rational>{3, 0, 2, 0, 3}));
  CHECK(hesse_model(3, 0, 0).is_zero());
  auto u5 = hesse_model(5, 1, 0).alternating_matrix();
  auto v5 = variable_names(5);
  CHECK(u5(0, 1) == parse_polynomial("x1", v5));
  CHECK(u5(0, 2).is_zero());
  CHECK(u5(0, 3).is_zero());
  CHECK(u5(0, 4) == parse_polynomial("-x4", v5));
}

TEST_CASE("printed D for n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(hesse_polynomials(n).d == pencil(fixtures::printed_hesse_d(n)));
  }
}

TEST_CASE("hesse polynomial relations") {
  auto c4 = pencil("c4"), c6 = pencil("c6");
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto& h = hesse_polynomials(n);
    CHECK(h.c4.pow(3) - h.c6.pow(2) == (c4.pow(3) - c6.pow(2)) * h.d.pow(n));
    // mu = 0 is the identity fibre.
    auto at_mu0 = h.c4.substitute({pencil("l"), Polynomial(4), c4, c6});
    CHECK(at_mu0 == c4 * pencil("l").pow(klein_c4_degree(n)));
    // c4 and c6 from the Hessian and Jacobian of D.
    Rational deg = klein_degree(n);
    auto dl = h.d.derivative(0), dm = h.d.derivative(1);
    auto hess = dl.derivative(0) * dm.derivative(1) - dl.derivative(1) * dl.derivative(1);
    CHECK(h.c4 == Rational(-1) / (deg * deg * (deg - 1) * (deg - 1)) * hess);
    auto jac = dl * h.c4.derivative(1) - dm * h.c4.derivative(0);
    CHECK(h.c6 == Rational(1) / (deg * klein_c4_degree(n)) * jac);
  }
}

TEST_CASE("dual hesse polynomials") {
  auto l = pencil("l"), m = pencil("m"), c4 = pencil("c4"), c6 = pencil("c6");
  auto d0 = c4.pow(3) - c6.pow(2);
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto& h = hesse_polynomials(n);
    const auto& g = dual_hesse_polynomials(n);
    CHECK(g.kind == PencilKind::dual);
    CHECK(g.c4.pow(3) - g.c6.pow(2) == d0.pow(n - 1) * g.d.pow(n));
    std::vector<Polynomial> sub = {c6 * l + c4.pow(2) * m, Rational(-1) * c4 * l - c6 * m, c4, c6};
    auto D = h.d.substitute(sub), C4 = h.c4.substitute(sub), C6 = h.c6.substitute(sub);
    switch (n) {
      case 2:
        CHECK(D == Rational(-1) * d0 * g.c6);
        CHECK(C4 == d0 * g.c4);
        CHECK(C6 == d0.pow(2) * g.d);
        break;
      case 3:
        CHECK(D == Rational(-1) * d0 * g.c4);
        CHECK(C4 == Rational(-1) * d0.pow(2) * g.d);
        CHECK(C6 == Rational(-1) * d0.pow(2) * g.c6);
        break;
      case 4:
        CHECK(D == d0.pow(2) * g.d);
        CHECK(C4 == d0.pow(2) * g.c4);
        CHECK(C6 == d0.pow(3) * g.c6);
        break;
      default:
        CHECK(D == d0.pow(3) * g.d);
        CHECK(C4 == d0.pow(4) * g.c4);
        CHECK(C6 == d0.pow(6) * g.c6);
    }
  }
  const auto& h2 = hesse_polynomials(2);
  const auto& g2 = dual_hesse_polynomials(2);
  CHECK(h2.d == g2.d);
  CHECK(h2.c4 == g2.c4);
  CHECK(h2.c6 == g2.c6);
}

TEST_CASE("rubin-silverberg polynomials") {
  std::vector<std::string> jt = {"J", "t"};
  auto J = Polynomial::variable(2, 0), t = Polynomial::variable(2, 1);
  auto zero_t = [&](const Polynomial& p) { return p.substitute({J, Polynomial(2)}); };
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const auto& rs = rubin_silverberg_polynomials(n);
    CHECK(zero_t(rs.alpha) == Polynomial(2, Rational(1)));
    CHECK(zero_t(rs.beta) == Polynomial(2, Rational(1)));
    if (n == 3) {
      CHECK(rs.alpha.degree_in(1) == 4);
      CHECK(rs.gamma.pow(3) == rs.alpha.pow(3) * J + rs.beta.pow(2) * (Polynomial(2, Rational(1)) - J));
      CHECK(zero_t(rs.gamma) == Polynomial(2, Rational(1)));
    }
  }
  CHECK_THROWS_AS(rubin_silverberg_polynomials(2), std::invalid_argument);
}

TEST_CASE("rubin-silverberg polynomials agree with direct substitution") {
  std::mt19937 rng(41);
  auto t = Polynomial::variable(1, 0);
  for (int trial = 0; trial < 5; ++trial) {
    Rational c4 = testsupport::random_nonzero(rng), c6 = testsupport::random_nonzero(rng);
    Rational d0 = c4 * c4 * c4 - c6 * c6;
    if (d0 == 0) continue;
    Rational J = c4 * c4 * c4 / d0;
    std::vector<Polynomial> pencil_point = {Polynomial(1, Rational(1)) - (c6 * c6 / d0) * t,
                                            (c4 * c6 / d0) * t};
    std::vector<Polynomial> at_j = {Polynomial(1, J), t};
    for (int n = 3; n <= 5; ++n) {
      const auto& h = hesse_polynomials(n);
      const auto& rs = rubin_silverberg_polynomials(n);
      CHECK(specialise(h.c4, c4, c6).substitute(pencil_point) == c4 * rs.alpha.substitute(at_j));
      CHECK(specialise(h.c6, c4, c6).substitute(pencil_point) == c6 * rs.beta.substitute(at_j));
      if (n == 3) CHECK(specialise(h.d, c4, c6).substitute(pencil_point) == rs.gamma.substitute(at_j));
    }
  }
}
