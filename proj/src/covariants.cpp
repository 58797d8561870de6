#include "g1/covariants.hpp"

#include "g1/degree5.hpp"
#include "g1/hesse.hpp"

namespace g1 {

namespace {

using Q5 = std::array<Rational, 5>;

Q5 quartic_coeffs(const GenusOneModel& m) {
  const auto& c = m.coefficients();
  return {c[0], c[1], c[2], c[3], c[4]};
}

GenusOneModel hessian2(const GenusOneModel& m) {
  auto [a, b, c, d, e] = quartic_coeffs(m);
  return GenusOneModel::from_coefficients(
      2, {8 * a * c - 3 * b * b, 24 * a * d - 4 * b * c, 48 * a * e + 6 * b * d - 4 * c * c,
          24 * b * e - 4 * c * d, 8 * c * e - 3 * d * d});
}

GenusOneModel contravariant_p2(const GenusOneModel& m) {
  auto [a, b, c, d, e] = quartic_coeffs(m);
  return GenusOneModel::from_coefficients(2, {e, -d, c, -b, a});
}

GenusOneModel contravariant_q2(const GenusOneModel& m) {
  auto [a, b, c, d, e] = quartic_coeffs(m);
  return GenusOneModel::from_coefficients(
      2, {8 * c * e - 3 * d * d, -(24 * b * e - 4 * c * d), 48 * a * e + 6 * b * d - 4 * c * c,
          -(24 * a * d - 4 * b * c), 8 * a * c - 3 * b * b});
}

// -1/2 det of the second partials in the first three variables.
Polynomial ternary_hessian(const Polynomial& u) {
  PolyMatrix h(3, 3, u.nvars());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = u.derivative(i).derivative(j);
  return Rational(-1, 2) * h.determinant();
}

// Restricts a polynomial in (x, y, z, params) to 3 variables.
Polynomial drop_params(const Polynomial& p) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    images.push_back(i < 3 ? Polynomial::variable(3, i) : Polynomial(3));
  return p.substitute(images);
}

GenusOneModel contravariant_q3(const GenusOneModel& m) {
  // P(U + t H) = P + 3 t Q + O(t^2), with t an extra variable.
  Polynomial u = components(m)[0].remap(4, {0, 1, 2});
  Polynomial t = Polynomial::variable(4, 3);
  Polynomial pencil = u + t * ternary_hessian(u);
  Polynomial p = caylean(pencil);
  Polynomial linear(4);
  for (const auto& [e, c] : p.terms())
    if (e[3] == 1) linear.add_term({e[0], e[1], e[2], 0}, c / 3);
  return GenusOneModel::cubic(drop_params(linear));
}

RationalMatrix as_matrix(const PolyMatrix& m, const Exponents& e) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coefficient(e);
  return r;
}

PolyMatrix pencil_matrix(const RationalMatrix& a, const RationalMatrix& b) {
  PolyMatrix p(a.rows(), a.cols(), 2);
  Polynomial s = Polynomial::variable(2, 0), t = Polynomial::variable(2, 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = a(i, j) * s + b(i, j) * t;
  return p;
}

RationalMatrix adjugate(const RationalMatrix& m) {
  PolyMatrix p(m.rows(), m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Polynomial(0, m(i, j));
  return as_matrix(p.adjugate(), {});
}

// Coefficient of s^2 t in adj(s adj A + t adj B).
RationalMatrix second_adjugate_coefficient(const RationalMatrix& a, const RationalMatrix& b, const Exponents& e) {
  return as_matrix(pencil_matrix(adjugate(a), adjugate(b)).adjugate(), e);
}

// T1 for a pair with det A != 0.
RationalMatrix t1_direct(const RationalMatrix& a, const RationalMatrix& b) {
  Rational da = a.determinant();
  return (1 / da) * second_adjugate_coefficient(a, b, {2, 1});
}

// T1 has degree 2 in A, so T1(A + tau I, B) is quadratic in tau; recover
// T1(A, B) by interpolation through three shifts with invertible A + tau I.
RationalMatrix t1_interpolated(const RationalMatrix& a, const RationalMatrix& b) {
  std::vector<Rational> taus;
  std::vector<RationalMatrix> values;
  for (long k = 1; taus.size() < 3; ++k) {
    RationalMatrix shifted = a + Rational(k) * RationalMatrix::identity(4);
    if (shifted.determinant() == 0) continue;
    taus.emplace_back(k);
    values.push_back(t1_direct(shifted, b));
  }
  RationalMatrix r(4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational w = 1;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i) w *= (0 - taus[j]) / (taus[i] - taus[j]);
    r = r + w * values[i];
  }
  return r;
}

RationalMatrix compute_t1(const RationalMatrix& a, const RationalMatrix& b) {
  return a.determinant() != 0 ? t1_direct(a, b) : t1_interpolated(a, b);
}

GenusOneModel hessian4(const GenusOneModel& m) {
  auto k = degree4_covariant_data(m);
  RationalMatrix a = m.quadric_matrix(0), b = m.quadric_matrix(1);
  return GenusOneModel::quadrics(Rational(6) * k.t2 - k.c * a - 3 * k.b * b,
                                 Rational(6) * k.t1 - k.c * b - 3 * k.d * a);
}

GenusOneModel contravariant_p4(const GenusOneModel& m) {
  auto k = degree4_covariant_data(m);
  Rational h(3, 2);
  return GenusOneModel::quadrics(
      6 * k.e * k.s[0] - h * k.d * k.s[1] + k.c * k.s[2] - h * k.b * k.s[3],
      -h * k.d * k.s[0] + k.c * k.s[1] - h * k.b * k.s[2] + 6 * k.a * k.s[3]);
}

GenusOneModel contravariant_q4(const GenusOneModel& m) {
  auto k = degree4_covariant_data(m);
  const Rational &a = k.a, &b = k.b, &c = k.c, &d = k.d, &e = k.e;
  Rational h(3, 2), n(9, 2);
  Rational f0 = 12 * c * e - n * d * d;
  Rational f1 = -9 * b * e + h * c * d;
  Rational f2 = 12 * a * e + h * b * d - c * c;
  Rational f3 = -9 * a * d + h * b * c;
  Rational f4 = 12 * a * c - n * b * b;
  return GenusOneModel::quadrics(f0 * k.s[0] + f1 * k.s[1] + f2 * k.s[2] + f3 * k.s[3],
                                 f1 * k.s[0] + f2 * k.s[1] + f3 * k.s[2] + f4 * k.s[3]);
}

void require_degree_234(const GenusOneModel& m) {
  if (m.degree() < 2 || m.degree() > 4)
    throw std::invalid_argument("contravariants are available in degrees 2, 3, 4");
}

}  // namespace

Polynomial caylean(const Polynomial& u) {
  std::size_t nv = u.nvars();
  if (nv < 3) throw std::invalid_argument("caylean needs at least three variables");
  Polynomial x = Polynomial::variable(nv, 0), y = Polynomial::variable(nv, 1), z = Polynomial::variable(nv, 2);
  Polynomial zero(nv);
  std::array<std::array<Polynomial, 3>, 3> points = {{{zero, z, -y}, {-z, zero, x}, {y, -x, zero}}};
  PolyMatrix m(3, 3, nv);
  for (std::size_t r = 0; r < 3; ++r) {
    std::vector<Polynomial> images(points[r].begin(), points[r].end());
    for (std::size_t i = 3; i < nv; ++i) images.push_back(Polynomial::variable(nv, i));
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = u.derivative(c).substitute(images);
  }
  return -m.determinant().divide_exact(x * y * z);
}

Degree4Covariants degree4_covariant_data(const GenusOneModel& m) {
  if (m.degree() != 4) throw std::invalid_argument("degree4_covariant_data needs a degree-4 model");
  RationalMatrix a = m.quadric_matrix(0), b = m.quadric_matrix(1);
  PolyMatrix pencil = pencil_matrix(a, b);
  Polynomial det = pencil.determinant();
  Degree4Covariants k;
  k.a = det.coefficient({4, 0});
  k.b = det.coefficient({3, 1});
  k.c = det.coefficient({2, 2});
  k.d = det.coefficient({1, 3});
  k.e = det.coefficient({0, 4});
  PolyMatrix adj = pencil.adjugate();
  for (int i = 0; i < 4; ++i) k.s[i] = as_matrix(adj, {3 - i, i});
  k.t1 = compute_t1(a, b);
  // Swapping A and B exchanges T1 and T2.
  k.t2 = compute_t1(b, a);
  return k;
}

GenusOneModel hessian(const GenusOneModel& m) {
  switch (m.degree()) {
    case 2: return hessian2(m);
    case 3: return GenusOneModel::cubic(ternary_hessian(components(m)[0]));
    case 4: return hessian4(m);
    case 5: return hessian5(m);
  }
  throw std::invalid_argument("model degree must be 2, 3, 4 or 5");
}

GenusOneModel contravariant_p(const GenusOneModel& m) {
  require_degree_234(m);
  switch (m.degree()) {
    case 2: return contravariant_p2(m);
    case 3: return GenusOneModel::cubic(caylean(components(m)[0]));
    default: return contravariant_p4(m);
  }
}

GenusOneModel contravariant_q(const GenusOneModel& m) {
  require_degree_234(m);
  switch (m.degree()) {
    case 2: return contravariant_q2(m);
    case 3: return contravariant_q3(m);
    default: return contravariant_q4(m);
  }
}

Invariants invariants(const GenusOneModel& m) {
  if (m.degree() == 5) return invariants5(m);
  Rational k = kappa(m.degree());
  Invariants inv;
  inv.c4 = pairing(m, contravariant_p(m)) / k;
  inv.c6 = pairing(m, contravariant_q(m)) / k;
  inv.disc = (inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6) / 1728;
  return inv;
}

}  // namespace g1
