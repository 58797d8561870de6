#pragma once

#include <string>
#include <vector>

#include "g1/model.hpp"

// Worked examples: genus one models together with the pair of curves (E, F)
// and generator points on F they were built from.
namespace fixtures {

using g1::GenusOneModel;
using g1::Polynomial;
using g1::Rational;

struct CurveData {
  std::vector<Rational> a;  // a1, a2, a3, a4, a6
};

struct Example {
  std::string label;
  int degree;
  bool reverse;
  CurveData e, f;
  std::vector<std::pair<Rational, Rational>> points;
  GenusOneModel model;
  Rational c4, c6, disc;
  Rational root_l, root_m;
};

inline std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline GenusOneModel cubic(const std::string& text) {
  return GenusOneModel::cubic(g1::parse_polynomial(text, {"x", "y", "z"}));
}

inline GenusOneModel quadrics(const std::string& q1, const std::string& q2) {
  auto names = g1::variable_names(4);
  return GenusOneModel::quadrics(g1::parse_polynomial(q1, names), g1::parse_polynomial(q2, names));
}

inline GenusOneModel alternating(const std::vector<std::string>& upper) {
  auto names = g1::variable_names(5);
  std::vector<Polynomial> forms;
  for (const auto& s : upper) forms.push_back(g1::parse_polynomial(s, names));
  return GenusOneModel::alternating(forms);
}

inline GenusOneModel quintic_1058() {
  return alternating({"-x1 + x3 - x5", "x4", "x2 + x4", "-x4", "x2 + x5", "-x1 + x5", "-x3", "x3", "x5", "0"});
}

inline GenusOneModel hessian_1058() {
  return alternating({"x1 - 61*x3 - 35*x5", "12*x1 - 12*x2 + 36*x3 - 13*x4 - 60*x5",
                      "-x2 - 12*x3 - 37*x4 - 12*x5", "12*x2 - 12*x3 - 11*x4 + 12*x5",
                      "12*x1 + 23*x2 - 12*x3 + 72*x4 + 47*x5", "x1 - 12*x2 + 12*x3 + 47*x5",
                      "-12*x1 - 12*x2 + 25*x3 - 24*x4 - 36*x5", "-24*x2 + 35*x3 - 24*x4 - 48*x5",
                      "-12*x3 - x5", "-24*x2 + 12*x3 - 12*x5"});
}

// The printed expansions of D(l, m) for n = 2..5, in (l, m, c4, c6).
inline const char* printed_hesse_d(int n) {
  static const char* printed[] = {
      "l^3 - 3*c4*l*m^2 - 2*c6*m^3",
      "l^4 - 6*c4*l^2*m^2 - 8*c6*l*m^3 - 3*c4^2*m^4",
      "l^6 - 15*c4*l^4*m^2 - 40*c6*l^3*m^3 - 45*c4^2*l^2*m^4 - 24*c4*c6*l*m^5 + 27*c4^3*m^6 - 32*c6^2*m^6",
      "l^12 - 66*c4*l^10*m^2 - 440*c6*l^9*m^3 - 1485*c4^2*l^8*m^4 - 3168*c4*c6*l^7*m^5"
      " + 5940*c4^3*l^6*m^6 - 10560*c6^2*l^6*m^6 - 4752*c4^2*c6*l^5*m^7"
      " - 66825*c4^4*l^4*m^8 + 63360*c4*c6^2*l^4*m^8 - 142560*c4^3*c6*l^3*m^9 + 140800*c6^3*l^3*m^9"
      " - 133650*c4^5*l^2*m^10 + 133056*c4^2*c6^2*l^2*m^10 - 61560*c4^4*c6*l*m^11 + 61440*c4*c6^3*l*m^11"
      " + 91125*c4^6*m^12 - 193536*c4^3*c6^2*m^12 + 102400*c6^4*m^12",
  };
  return printed[n - 2];
}

inline std::vector<Example> examples() {
  std::vector<Example> out;
  out.push_back({"571", 2, false,
                 {ints({0, -1, 1, -929, -10595})},
                 {ints({0, 1, 1, -4, 2})},
                 {{0, 1}, {1, 0}},
                 GenusOneModel::from_coefficients(2, ints({0, 4, 16, 4, 1})),
                 3328, -202240, -2338816, -116, 1});
  out.push_back({"2006", 3, false,
                 {ints({1, 1, 0, -58293654, -171333232940})},
                 {ints({1, 1, 0, -88, 284})},
                 {{-10, 22}, {2, 10}},
                 cubic("x^2*y - 2*x^2*z + x*y^2 - x*y*z - x*z^2 - 2*y^3 + y^2*z + 5*y*z^2 + 2*z^3"),
                 4249, -277181, -68204, 521, 9});
  out.push_back({"2541", 3, true,
                 {ints({0, -1, 1, -180572, -26845765})},
                 {ints({1, 1, 1, 3, 12})},
                 {{-2, 2}, {0, 3}},
                 cubic("-x^2*z + x*y^2 - x*y*z + x*z^2 + 2*y^2*z + y*z^2 - 6*z^3"),
                 -143, -9449, -53361, -55, 1});
  out.push_back({"2045-4090", 4, false,
                 {ints({1, -1, 0, -5470, -862675})},
                 {ints({1, 1, 0, 7, 37})},
                 {{2, 7}, {18, 71}},
                 quadrics("x1*x4 - x2*x3 - x2*x4 + x3^2 - x3*x4 + 2*x4^2",
                          "x1*x3 + x1*x4 + x2^2 - x2*x3 + x3^2 - 7*x3*x4 - 4*x4^2"),
                 -311, -29573, -523520, 5, 1});
  out.push_back({"1309", 4, true,
                 {ints({0, 0, 1, -406957, -99924251})},
                 {ints({0, -1, 1, -22, 52})},
                 {{16, 59}, {-1, 8}},
                 quadrics("x1*x3 + x1*x4 + x2*x4 - 2*x3*x4 + x4^2", "x1*x4 + x2^2 + x2*x3 - x2*x4 - 2*x3^2"),
                 1072, -38744, -155771, 35, 1});
  out.push_back({"1058", 5, false,
                 {ints({1, -1, 0, -332311, -73733731})},
                 {ints({1, 0, 1, 0, 2})},
                 {{-1, 1}, {0, 1}},
                 quintic_1058(),
                 -23, -1909, -2116, -23, 1});
  return out;
}

}  // namespace fixtures
