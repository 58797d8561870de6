#pragma once

#include "g1/model.hpp"
#include "g1/polynomial.hpp"

namespace g1 {

// Degree tables indexed by n = 2..5.
int klein_degree(int n);        // deg D = 12/(6-n)
int klein_c4_degree(int n);     // 4n/(6-n)
int klein_c6_degree(int n);     // 6n/(6-n)
Rational kappa(int n);          // 1/4, 1, 2, 5
Rational dual_tau(int n);       // 1, 2, 12, 12^4

// Klein's binary forms in (a, b).
struct KleinForms {
  int n = 0;
  Polynomial d, c4, c6;
};
KleinForms klein_forms(int n);

GenusOneModel hesse_model(int n, const Rational& a, const Rational& b);

// A pair of binary forms in (a, b).
struct DiscreteCovariant {
  Polynomial first, second;
};
// (-df/db, df/da)
DiscreteCovariant discrete_partial(const Polynomial& f);
// p1 q2 - p2 q1
Polynomial bracket(const DiscreteCovariant& p, const DiscreteCovariant& q);
// The identity covariant (a, b).
DiscreteCovariant discrete_identity();

enum class PencilKind { direct, dual };

// Binary forms in (l, m) = (lambda, mu) or (xi, eta), with coefficients in
// Q[c4, c6]: polynomials in the four variables (l, m, c4, c6).
struct HessePolynomials {
  int n = 0;
  PencilKind kind = PencilKind::direct;
  Polynomial d, c4, c6;
};

// Computed once per degree; safe to call from several threads.
const HessePolynomials& hesse_polynomials(int n);
const HessePolynomials& dual_hesse_polynomials(int n);

// Specialises the coefficient ring at numeric (c4, c6): a binary form in (l, m).
Polynomial specialise(const Polynomial& form, const Rational& c4, const Rational& c6);
Rational evaluate_form(const Polynomial& form, const Rational& c4, const Rational& c6,
                       const Rational& l, const Rational& m);

// Polynomials in (J, t); gamma is set for n = 3 only.
struct RubinSilverbergPolynomials {
  int n = 0;
  Polynomial alpha, beta, gamma;
};
const RubinSilverbergPolynomials& rubin_silverberg_polynomials(int n);

}  // namespace g1
