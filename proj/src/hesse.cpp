#include "g1/hesse.hpp"

#include <array>
#include <mutex>
#include <optional>

#include "g1/matrix.hpp"

namespace g1 {

namespace {

void check_n(int n) {
  if (n < 2 || n > 5) throw std::invalid_argument("n must be 2, 3, 4 or 5");
}

Polynomial va() { return Polynomial::variable(2, 0); }
Polynomial vb() { return Polynomial::variable(2, 1); }
Polynomial k2(long c) { return Polynomial(2, Rational(c)); }

Polynomial determinant2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  return a * d - b * c;
}

// Expresses a binary form in (a, b) as a polynomial in (c4, c6) by an exact
// linear solve against {c4^i c6^j : 4i + 6j = weight}.
Polynomial rewrite_in_invariants(const Polynomial& f, const KleinForms& k) {
  if (f.is_zero()) return Polynomial(2);
  int deg = f.total_degree();
  int unit_num = klein_c4_degree(k.n), unit_den = 4;  // (a,b)-degree per unit weight
  if ((deg * unit_den) % unit_num != 0) throw MathError("coefficient has non-integral weight");
  int weight = deg * unit_den / unit_num;
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; 4 * i <= weight; ++i)
    if ((weight - 4 * i) % 6 == 0) basis.emplace_back(i, (weight - 4 * i) / 6);
  auto mons = monomials_of_degree(2, deg);
  RationalMatrix m(mons.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto v = coefficient_vector(k.c4.pow(basis[col].first) * k.c6.pow(basis[col].second), mons);
    for (std::size_t r = 0; r < mons.size(); ++r) m(r, col) = v[r];
  }
  auto sol = m.solve(coefficient_vector(f, mons));
  if (!sol || m.rank() != basis.size()) throw MathError("coefficient is not in Q[c4, c6]");
  Polynomial out(2);
  for (std::size_t col = 0; col < basis.size(); ++col)
    out.add_term({basis[col].first, basis[col].second}, (*sol)[col]);
  return out;
}

// Substitutes (l a - m D_b, l b + m D_a) into f and rewrites each (l, m)
// coefficient; the result lives in (l, m, c4, c6).
Polynomial pencil_form(const Polynomial& f, const KleinForms& k, const Polynomial* divisor) {
  Polynomial l = Polynomial::variable(4, 0), m = Polynomial::variable(4, 1);
  auto lift = [](const Polynomial& p) { return p.remap(4, {2, 3}); };
  Polynomial a = lift(va()), b = lift(vb());
  Polynomial da = lift(k.d.derivative(0)), db = lift(k.d.derivative(1));
  Polynomial image = f.substitute({l * a - m * db, l * b + m * da});
  if (divisor) image = image.divide_exact(lift(*divisor));
  Polynomial out(4);
  for (const auto& [lm, coeff] : image.split({0, 1})) {
    Polynomial r = rewrite_in_invariants(coeff, k);
    for (const auto& [e, c] : r.terms()) out.add_term({lm[0], lm[1], e[0], e[1]}, c);
  }
  return out;
}

HessePolynomials compute_direct(int n) {
  KleinForms k = klein_forms(n);
  HessePolynomials h;
  h.n = n;
  h.kind = PencilKind::direct;
  h.d = pencil_form(k.d, k, &k.d);
  h.c4 = pencil_form(k.c4, k, nullptr);
  h.c6 = pencil_form(k.c6, k, nullptr);
  Exponents lead{klein_degree(n), 0, 0, 0};
  if (h.d.coefficient(lead) != 1) throw MathError("Hesse polynomial D is not monic in lambda");
  return h;
}

HessePolynomials compute_dual(int n) {
  const HessePolynomials& h = hesse_polynomials(n);
  Polynomial xi = Polynomial::variable(4, 0), eta = Polynomial::variable(4, 1);
  Polynomial c4 = Polynomial::variable(4, 2), c6 = Polynomial::variable(4, 3);
  std::vector<Polynomial> sub{c6 * xi + c4 * c4 * eta, -(c4 * xi) - c6 * eta, c4, c6};
  Polynomial disc = c4.pow(3) - c6 * c6;
  auto reduce = [&](const Polynomial& f, unsigned power, int sign) {
    Polynomial r = f.substitute(sub).divide_exact(disc.pow(power));
    return sign > 0 ? r : -r;
  };
  HessePolynomials d;
  d.n = n;
  d.kind = PencilKind::dual;
  switch (n) {
    case 2:
      d.c6 = reduce(h.d, 1, -1);
      d.c4 = reduce(h.c4, 1, 1);
      d.d = reduce(h.c6, 2, 1);
      break;
    case 3:
      d.c4 = reduce(h.d, 1, -1);
      d.d = reduce(h.c4, 2, -1);
      d.c6 = reduce(h.c6, 2, -1);
      break;
    case 4:
      d.d = reduce(h.d, 2, 1);
      d.c4 = reduce(h.c4, 2, 1);
      d.c6 = reduce(h.c6, 3, 1);
      break;
    case 5:
      d.d = reduce(h.d, 3, 1);
      d.c4 = reduce(h.c4, 4, 1);
      d.c6 = reduce(h.c6, 6, 1);
      break;
  }
  return d;
}

// Rewrites f(1 + (1-J)t, c4 c6 t / (c4^3 - c6^2)) / divisor in (J, t), where
// f is a Hesse polynomial and divisor is c4^i c6^j.
Polynomial in_j_and_t(const Polynomial& f, int c4_shift, int c6_shift) {
  // Terms lambda^p mu^q c4^A c6^B. Expand lambda = 1 + (1-J) t and collect
  // c4^(A+q-c4_shift) c6^(B+q-c6_shift) / D0^q = J^(A'/3) (J-1)^(B'/2).
  Polynomial jv = Polynomial::variable(2, 0), tv = Polynomial::variable(2, 1);
  Polynomial one(2, Rational(1));
  Polynomial lambda = one + (one - jv) * tv;
  Polynomial out(2);
  std::vector<Polynomial> lambda_pow{one};
  for (const auto& [e, c] : f.terms()) {
    int p = e[0], q = e[1];
    int a = e[2] + q - c4_shift, b = e[3] + q - c6_shift;
    if (a < 0 || b < 0 || a % 3 != 0 || b % 2 != 0 || a / 3 + b / 2 != q)
      throw MathError("Rubin-Silverberg rewrite failed");
    while (static_cast<int>(lambda_pow.size()) <= p) lambda_pow.push_back(lambda_pow.back() * lambda);
    out += c * lambda_pow[p] * jv.pow(a / 3) * (jv - one).pow(b / 2) * tv.pow(q);
  }
  return out;
}

RubinSilverbergPolynomials compute_rs(int n) {
  const HessePolynomials& h = hesse_polynomials(n);
  RubinSilverbergPolynomials rs;
  rs.n = n;
  rs.alpha = in_j_and_t(h.c4, 1, 0);
  rs.beta = in_j_and_t(h.c6, 0, 1);
  if (n == 3) {
    Polynomial jv = Polynomial::variable(2, 0);
    Polynomial one(2, Rational(1));
    rs.gamma = exact_root(rs.alpha.pow(3) * jv + rs.beta.pow(2) * (one - jv), 3);
  }
  return rs;
}

template <typename T>
struct OncePerDegree {
  std::array<std::once_flag, 4> flags;
  std::array<std::optional<T>, 4> values;

  template <typename F>
  const T& get(int n, F compute) {
    check_n(n);
    std::call_once(flags[n - 2], [&] { values[n - 2] = compute(n); });
    return *values[n - 2];
  }
};

}  // namespace

int klein_degree(int n) {
  check_n(n);
  return 12 / (6 - n);
}

int klein_c4_degree(int n) {
  check_n(n);
  return 4 * n / (6 - n);
}

int klein_c6_degree(int n) {
  check_n(n);
  return 6 * n / (6 - n);
}

Rational kappa(int n) {
  check_n(n);
  static const Rational table[] = {Rational(1, 4), Rational(1), Rational(2), Rational(5)};
  return table[n - 2];
}

Rational dual_tau(int n) {
  check_n(n);
  static const Rational table[] = {Rational(1), Rational(2), Rational(12), Rational(20736)};
  return table[n - 2];
}

KleinForms klein_forms(int n) {
  check_n(n);
  Polynomial a = va(), b = vb();
  KleinForms k;
  k.n = n;
  switch (n) {
    case 2: k.d = a * (k2(64) * a * a - b * b); break;
    case 3: k.d = -(a * (k2(27) * a.pow(3) + b.pow(3))); break;
    case 4: k.d = a * b * (k2(16) * a.pow(4) - b.pow(4)); break;
    case 5: k.d = a * b * (a.pow(10) - k2(11) * a.pow(5) * b.pow(5) - b.pow(10)); break;
  }
  int dd = klein_degree(n);
  Polynomial da = k.d.derivative(0), db = k.d.derivative(1);
  Polynomial hess = determinant2(da.derivative(0), da.derivative(1), db.derivative(0), db.derivative(1));
  k.c4 = Rational(-1, (dd - 1) * (dd - 1)) * hess;
  k.c6 = Rational(1, klein_c4_degree(n)) * determinant2(da, db, k.c4.derivative(0), k.c4.derivative(1));
  return k;
}

GenusOneModel hesse_model(int n, const Rational& a, const Rational& b) {
  check_n(n);
  switch (n) {
    case 2: return GenusOneModel::from_coefficients(2, {a, 0, b / 4, 0, a});
    case 3: return GenusOneModel::from_coefficients(3, {a, 0, 0, 0, b, 0, a, 0, 0, a});
    case 4: {
      RationalMatrix q1(4, 4), q2(4, 4);
      q1(0, 0) = q1(2, 2) = 2 * a;
      q1(1, 3) = q1(3, 1) = -b;
      q2(1, 1) = q2(3, 3) = 2 * a;
      q2(0, 2) = q2(2, 0) = -b;
      return GenusOneModel::quadrics(q1, q2);
    }
    case 5: {
      // Upper triangle entries (pair, variable, coefficient) of u5.
      std::vector<Rational> c(50, Rational(0));
      auto set = [&](int pair, int var, const Rational& v) { c[5 * pair + var] = v; };
      set(0, 0, a);   // 12: a x1
      set(1, 1, b);   // 13: b x2
      set(2, 2, -b);  // 14: -b x3
      set(3, 3, -a);  // 15: -a x4
      set(4, 2, a);   // 23: a x3
      set(5, 3, b);   // 24: b x4
      set(6, 4, -b);  // 25: -b x5
      set(7, 4, a);   // 34: a x5
      set(8, 0, b);   // 35: b x1
      set(9, 1, a);   // 45: a x2
      return GenusOneModel::from_coefficients(5, std::move(c));
    }
  }
  throw std::invalid_argument("n must be 2, 3, 4 or 5");
}

DiscreteCovariant discrete_partial(const Polynomial& f) {
  if (f.nvars() != 2) throw std::invalid_argument("discrete_partial needs a binary form");
  return {-f.derivative(1), f.derivative(0)};
}

Polynomial bracket(const DiscreteCovariant& p, const DiscreteCovariant& q) {
  return p.first * q.second - p.second * q.first;
}

DiscreteCovariant discrete_identity() { return {va(), vb()}; }

const HessePolynomials& hesse_polynomials(int n) {
  static OncePerDegree<HessePolynomials> cache;
  return cache.get(n, compute_direct);
}

const HessePolynomials& dual_hesse_polynomials(int n) {
  static OncePerDegree<HessePolynomials> cache;
  return cache.get(n, compute_dual);
}

const RubinSilverbergPolynomials& rubin_silverberg_polynomials(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("Rubin-Silverberg polynomials need n = 3, 4 or 5");
  static OncePerDegree<RubinSilverbergPolynomials> cache;
  return cache.get(n, compute_rs);
}

Polynomial specialise(const Polynomial& form, const Rational& c4, const Rational& c6) {
  if (form.nvars() != 4) throw std::invalid_argument("specialise needs a form over Q[c4, c6]");
  return form.substitute({Polynomial::variable(2, 0), Polynomial::variable(2, 1), Polynomial(2, c4),
                          Polynomial(2, c6)});
}

Rational evaluate_form(const Polynomial& form, const Rational& c4, const Rational& c6, const Rational& l,
                       const Rational& m) {
  return form.evaluate({l, m, c4, c6});
}

}  // namespace g1
