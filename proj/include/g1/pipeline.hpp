#pragma once

#include <optional>
#include <vector>

#include "g1/elliptic.hpp"
#include "g1/model.hpp"

namespace g1 {

enum class Congruence { direct, reverse };

// (l : m) = (lambda : mu) on the pencil lambda U + mu H, or (xi : eta) on
// xi P + eta Q for reverse points.
struct PencilPoint {
  Rational l, m;
  Congruence kind = Congruence::direct;
  friend bool operator==(const PencilPoint&, const PencilPoint&) = default;
};

struct PencilSolution {
  PencilPoint point;
  GenusOneModel model;
};

struct PencilSearch {
  std::vector<PencilPoint> roots;          // every rational root of the binary form
  std::vector<PencilSolution> solutions;   // those whose model has E's invariants
};

// Rational roots of c4(l,m)^3 - j(E) disc D(l,m)^n at the invariants of m,
// each turned into lambda m + mu H(m) and rescaled to E's invariants. Degree
// 2 rescales by a quadratic twist instead.
PencilSearch pencil_solve(const GenusOneModel& m, const EllipticCurve& e);
// Same with the dual forms and xi P(m) + eta Q(m); degrees 2, 3, 4.
PencilSearch pencil_solve_reverse(const GenusOneModel& m, const EllipticCurve& e);

struct SyzygeticData {
  Rational xi;
  std::optional<Rational> eta_squared;  // degrees 3 and 4
  CurvePoint torsion;
};

struct SyzygeticPolygon {
  GenusOneModel model;
  SyzygeticData data;
};

// psi = x_T m + 3 H(m) for T of exact order n = degree(m) on
// y^2 = x^3 - 27 c4 x - 54 c6.
SyzygeticPolygon syzygetic_ngon(const GenusOneModel& m, const CurvePoint& t);

struct FamilyFibre {
  Rational a, b;         // y^2 = x^3 + a x + b
  bool singular = false;
  bool special_j = false;  // j(E) in {0, 1728}: the family need not be complete

  EllipticCurve curve() const;
};

// y^2 = x^3 - 27 C4 x - 54 C6 where C4, C6 are the Hesse polynomials (or
// tau^-2 and tau^-3 times the dual ones) at (l, m), with coefficients taken
// from E written as y^2 = x^3 - 27 c4 x - 54 c6.
FamilyFibre congruent_family_fibre(const EllipticCurve& e, int n, const PencilPoint& point);

// y^2 = x^3 + alpha(J,t) a x + beta(J,t) b for E: y^2 = x^3 + a x + b, or
// for reverse n = 3, y^2 = x^3 - 4 gamma J a x - 8 beta J^2 b.
FamilyFibre rubin_silverberg_fibre(const EllipticCurve& e, int n, const Rational& t,
                                   Congruence kind = Congruence::direct);

struct VisibilityResult {
  std::vector<PencilSolution> solutions;
  Invariants invariants;        // of E
  GenusOneModel embedded;       // F embedded by |(n-1).0 + P|
  int degree = 0;
  Congruence kind = Congruence::direct;
  CurvePoint point;
};

// Throws MathError listing the rational roots when no pencil point gives
// E's invariants. Reverse requests for n = 5 are treated as direct.
VisibilityResult visible_element(const EllipticCurve& e, const EllipticCurve& f, const CurvePoint& p, int n,
                                 Congruence kind);

}  // namespace g1
