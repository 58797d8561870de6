#pragma once

#include <vector>

#include "g1/matrix.hpp"
#include "g1/model.hpp"

namespace g1 {

// p_i = (-1)^(i+1) Pf(phi without row/column i), quadrics in x1..x5.
std::vector<Polynomial> pfaffians(const GenusOneModel& m);
// det(dp_i/dx_j), a quintic in x1..x5.
Polynomial s10(const GenusOneModel& m);
// det(sum_k d^2 p_k/dx_i dx_j v_k), a quintic in v1..v5.
Polynomial r10(const GenusOneModel& m);
// f(d/dv) g for f, g in the same variables.
Polynomial contract(const Polynomial& f, const Polynomial& g);
// Quadratic forms q_i in v1..v5 with q_i(p_1..p_5) = dS10/dx_i. Throws
// MathError when no unique solution exists.
std::vector<Polynomial> aux_quadrics(const GenusOneModel& m);

// The Pfaffians together with the quadrics
//   X_k = sum_{i,j} x_i x_j [v_k] <q_j, <q_i, R10>>,
// so that the Pfaffians of the Hessian are 4 c4 p - (3/16) X.
struct EvaluationData {
  std::vector<Polynomial> pfaffians;
  std::vector<Polynomial> contracted;
};
EvaluationData evaluation_data(const GenusOneModel& m);

// 35 x 25 matrix of the linear system sum_j l_j q_j = 0, rows indexed by
// cubic monomials, columns by (j, k) for the x_k coefficient of l_j.
RationalMatrix linear_syzygy_matrix(const std::vector<Polynomial>& quadrics);

// The rational c at which 4c p - (3/16) X has a 5-dimensional space of
// linear syzygies.
std::vector<Rational> rank_drop_roots(const EvaluationData& data);

// Model whose Pfaffians are exactly the given quadrics (up to the sign of
// the model).
GenusOneModel model_from_pfaffians(const std::vector<Polynomial>& quadrics);
// Model psi whose Pfaffians are proportional to the given quadrics, which
// may be any basis of the ideal's quadrics: quadrics = scale * pfaffians(psi).
GenusOneModel model_from_quadric_basis(const std::vector<Polynomial>& quadrics, Rational* scale = nullptr);

struct Degree5Analysis {
  Invariants invariants;
  GenusOneModel hessian;
};
Degree5Analysis analyse_degree5(const GenusOneModel& m);
Invariants invariants5(const GenusOneModel& m);
GenusOneModel hessian5(const GenusOneModel& m);

// Determinant of the 10 x 10 matrix of coefficients of (m | h).
Rational joint_determinant(const GenusOneModel& m, const GenusOneModel& h);

}  // namespace g1
