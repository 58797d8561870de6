#include "g1/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace g1 {

namespace {

using IntPoly = std::vector<Integer>;

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate derivative(const Univariate& p) {
  Univariate d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a by b over Q.
Univariate remainder(Univariate a, const Univariate& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational k = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= k * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate quotient(Univariate a, const Univariate& b) {
  if (a.size() < b.size()) return {};
  Univariate q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational k = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = k;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= k * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

Univariate monic(Univariate p) {
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

Univariate gcd(Univariate a, Univariate b) {
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : monic(std::move(r));
  }
  return monic(std::move(a));
}

IntPoly primitive_integer(const Univariate& p) {
  Integer l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  for (const auto& c : p) out.push_back(c.get_num() * (l / c.get_den()));
  Integer g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& c : out) c /= g;
  return out;
}

unsigned long eval_mod(const IntPoly& p, unsigned long r, unsigned long prime) {
  unsigned long acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    unsigned long c = mpz_fdiv_ui(it->get_mpz_t(), prime);
    acc = (acc * r + c) % prime;
  }
  return acc;
}

Integer eval_mod(const IntPoly& p, const Integer& r, const Integer& modulus) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * r + *it;
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
  }
  return acc;
}

}  // namespace

Rational evaluate(const Univariate& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Simple roots modulo a good prime are lifted 2-adically-in-exponent by
// Newton's method past twice the root bound, then read off as a_n*r / a_n.
std::vector<Rational> rational_roots(const Univariate& input) {
  Univariate p = input;
  trim(p);
  if (p.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() >= 2) {
    Univariate dp = derivative(p);
    Univariate g = gcd(p, dp);
    Univariate sf = g.size() > 1 ? quotient(p, g) : p;
    IntPoly f = primitive_integer(sf);
    IntPoly df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
    const Integer& lead = f.back();

    Integer bound = 0;
    for (const auto& c : f) bound = std::max(bound, Integer(abs(c)));
    bound = 2 * (abs(lead) + bound);

    Integer prime_z = 1000;
    for (;;) {
      mpz_nextprime(prime_z.get_mpz_t(), prime_z.get_mpz_t());
      unsigned long prime = prime_z.get_ui();
      if (mpz_divisible_ui_p(lead.get_mpz_t(), prime)) continue;
      std::vector<unsigned long> residues;
      bool good = true;
      for (unsigned long r = 0; r < prime && good; ++r) {
        if (eval_mod(f, r, prime) != 0) continue;
        if (eval_mod(df, r, prime) == 0) good = false;
        residues.push_back(r);
      }
      if (!good) continue;
      for (unsigned long r0 : residues) {
        Integer r = r0, modulus = prime_z;
        while (modulus <= bound) {
          modulus *= modulus;
          Integer fr = eval_mod(f, r, modulus), dfr = eval_mod(df, r, modulus), inv;
          if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), modulus.get_mpz_t()) == 0)
            throw MathError("Hensel lifting lost invertibility");
          r = r - fr * inv;
          mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
        }
        Integer w = lead * r;
        mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), modulus.get_mpz_t());
        if (2 * w > modulus) w -= modulus;
        Rational candidate(w, lead);
        candidate.canonicalize();
        if (evaluate(p, candidate) == 0) roots.push_back(candidate);
      }
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Univariate to_univariate(const Polynomial& p, std::size_t var) {
  Univariate out;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    std::size_t k = static_cast<std::size_t>(e[var]);
    if (out.size() <= k) out.resize(k + 1, Rational(0));
    out[k] = c;
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> binary_form_roots(const Polynomial& form) {
  if (form.nvars() != 2 || !form.is_homogeneous())
    throw std::invalid_argument("binary_form_roots needs a binary form");
  if (form.is_zero()) throw std::invalid_argument("binary_form_roots of the zero form");
  int d = form.total_degree();
  std::vector<std::pair<Rational, Rational>> out;
  Univariate dehom(static_cast<std::size_t>(d) + 1, Rational(0));
  for (const auto& [e, c] : form.terms()) dehom[static_cast<std::size_t>(e[0])] = c;
  if (dehom.back() == 0) out.emplace_back(1, 0);
  for (const auto& r : rational_roots(dehom)) out.emplace_back(r.get_num(), r.get_den());
  return out;
}

Univariate interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching points");
  std::size_t n = xs.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw std::invalid_argument("interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    }
  Univariate out{coef[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // out = out * (x - xs[k]) + coef[k]
    Univariate next(out.size() + 1, Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] -= out[i] * xs[k];
    }
    next[0] += coef[k];
    out = std::move(next);
  }
  trim(out);
  return out;
}

}  // namespace g1
