#pragma once

#include <array>

#include "g1/model.hpp"

namespace g1 {

// Hessian of any model; degree 5 goes through the evaluation algorithm.
GenusOneModel hessian(const GenusOneModel& m);
// Contravariants of weights 4 and 6, degrees 2, 3, 4.
GenusOneModel contravariant_p(const GenusOneModel& m);
GenusOneModel contravariant_q(const GenusOneModel& m);
Invariants invariants(const GenusOneModel& m);

// Quantities attached to a quadric pair (A, B):
//   det(sA+tB) = a s^4 + b s^3 t + c s^2 t^2 + d s t^3 + e t^4
//   adj(sA+tB) = S0 s^3 + S1 s^2 t + S2 s t^2 + S3 t^3
//   adj(s adj A + t adj B) = a^2 A s^3 + a T1 s^2 t + e T2 s t^2 + e^2 B t^3
struct Degree4Covariants {
  Rational a, b, c, d, e;
  std::array<RationalMatrix, 4> s;
  RationalMatrix t1, t2;
};
Degree4Covariants degree4_covariant_data(const GenusOneModel& m);

// Caylean of a ternary cubic whose first three variables are x, y, z;
// further variables are carried along as parameters.
Polynomial caylean(const Polynomial& cubic);

}  // namespace g1
