#include "g1/degree5.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "g1/hesse.hpp"
#include "g1/roots.hpp"

namespace g1 {

namespace {

void require_degree5(const GenusOneModel& m) {
  if (m.degree() != 5) throw std::invalid_argument("degree-5 model required");
}

Polynomial x(std::size_t i) { return Polynomial::variable(5, i); }

const std::vector<Exponents>& quadric_monomials() {
  static const std::vector<Exponents> mons = monomials_of_degree(5, 2);
  return mons;
}

// Index pairs (a, b), a <= b, in the order of quadric_monomials().
std::vector<std::pair<std::size_t, std::size_t>> quadric_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : quadric_monomials()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 5; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    out.emplace_back(idx[0], idx[1]);
  }
  return out;
}

Polynomial pfaffian4(const PolyMatrix& m, const std::array<std::size_t, 4>& k) {
  return m(k[0], k[1]) * m(k[2], k[3]) - m(k[0], k[2]) * m(k[1], k[3]) + m(k[0], k[3]) * m(k[1], k[2]);
}

std::vector<Polynomial> pfaffians_of(const PolyMatrix& m) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < 5; ++i) {
    std::array<std::size_t, 4> k{};
    for (std::size_t j = 0, t = 0; j < 5; ++j)
      if (j != i) k[t++] = j;
    Polynomial p = pfaffian4(m, k);
    out.push_back(i % 2 == 0 ? p : -p);
  }
  return out;
}

Polynomial s10_of(const std::vector<Polynomial>& p) {
  PolyMatrix j(5, 5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) j(r, c) = p[r].derivative(c);
  return j.determinant();
}

Polynomial r10_of(const std::vector<Polynomial>& p) {
  PolyMatrix m(5, 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Polynomial entry(5);
      for (std::size_t k = 0; k < 5; ++k) entry += p[k].derivative(i).derivative(j).constant_term() * x(k);
      m(i, j) = entry;
    }
  return m.determinant();
}

std::vector<Polynomial> aux_quadrics_of(const std::vector<Polynomial>& p) {
  Polynomial s = s10_of(p);
  auto quartics = monomials_of_degree(5, 4);
  auto pairs = quadric_pairs();
  RationalMatrix sys(quartics.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    auto v = coefficient_vector(p[pairs[col].first] * p[pairs[col].second], quartics);
    for (std::size_t r = 0; r < quartics.size(); ++r) sys(r, col) = v[r];
  }
  if (sys.rank() != pairs.size())
    throw MathError("products of the Pfaffians are dependent: the model is singular");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < 5; ++i) {
    auto sol = sys.solve(coefficient_vector(s.derivative(i), quartics));
    if (!sol) throw MathError("dS10/dx_i is not a quadratic form in the Pfaffians");
    Polynomial q(5);
    for (std::size_t col = 0; col < pairs.size(); ++col)
      q += (*sol)[col] * x(pairs[col].first) * x(pairs[col].second);
    out.push_back(q);
  }
  return out;
}

// Alternating model with slices psi_k (coefficient matrix of x_k).
GenusOneModel model_from_slices(const std::vector<RationalMatrix>& slices) {
  std::vector<Rational> c(50);
  const auto& pairs = alternating_pairs();
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t k = 0; k < 5; ++k) c[5 * r + k] = slices[k](pairs[r].first, pairs[r].second);
  return GenusOneModel::from_coefficients(5, std::move(c));
}

// Buchsbaum-Eisenbud reconstruction: returns psi and the scalar r with
// quadrics = r * pfaffians(psi).
std::pair<GenusOneModel, Rational> reconstruct(const std::vector<Polynomial>& q) {
  if (q.size() != 5) throw std::invalid_argument("five quadrics required");
  auto kernel = linear_syzygy_matrix(q).nullspace();
  if (kernel.size() != 5)
    throw MathError("space of linear syzygies has dimension " + std::to_string(kernel.size()) + ", expected 5");
  // S_k[r][j]: coefficient of x_k in the j-th entry of syzygy r.
  std::vector<RationalMatrix> s(5, RationalMatrix(5, 5));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) s[k](r, j) = kernel[r][5 * j + k];
  // B S + (B S)^T = 0 for a constant B, unknown B_ir at index 5i + r.
  RationalMatrix sys(75, 25);
  std::size_t row = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k, ++row)
        for (std::size_t r = 0; r < 5; ++r) {
          sys(row, 5 * i + r) += s[k](r, j);
          sys(row, 5 * j + r) += s[k](r, i);
        }
  auto b_space = sys.nullspace();
  if (b_space.size() != 1)
    throw MathError("alternating completion has a solution space of dimension " + std::to_string(b_space.size()) +
                    ", expected 1");
  RationalMatrix b(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t r = 0; r < 5; ++r) b(i, r) = b_space[0][5 * i + r];
  std::vector<RationalMatrix> psi;
  for (std::size_t k = 0; k < 5; ++k) psi.push_back(b * s[k]);
  GenusOneModel model = model_from_slices(psi);

  auto pf = pfaffians(model);
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < 5 && !ratio; ++i)
    for (const auto& [e, c] : pf[i].terms()) {
      ratio = q[i].coefficient(e) / c;
      break;
    }
  if (!ratio || *ratio == 0) throw MathError("reconstructed model has vanishing Pfaffians");
  for (std::size_t i = 0; i < 5; ++i)
    if (q[i] != *ratio * pf[i]) throw MathError("quadrics are not the Pfaffians of a model");
  return {model, *ratio};
}

std::vector<Polynomial> pencil_quadrics(const EvaluationData& d, const Rational& c) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < 5; ++k) out.push_back(4 * c * d.pfaffians[k] - Rational(3, 16) * d.contracted[k]);
  return out;
}

}  // namespace

std::vector<Polynomial> pfaffians(const GenusOneModel& m) {
  require_degree5(m);
  return pfaffians_of(m.alternating_matrix());
}

Polynomial s10(const GenusOneModel& m) {
  require_degree5(m);
  return s10_of(pfaffians(m));
}

Polynomial r10(const GenusOneModel& m) {
  require_degree5(m);
  return r10_of(pfaffians(m));
}

Polynomial contract(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("contraction variable-count mismatch");
  if (f.is_homogeneous() && g.is_homogeneous() && !f.is_zero() && !g.is_zero() &&
      f.total_degree() > g.total_degree())
    throw std::invalid_argument("contraction degree mismatch");
  std::size_t n = f.nvars();
  Polynomial out(n);
  Exponents e(n);
  for (const auto& [fe, fc] : f.terms())
    for (const auto& [ge, gc] : g.terms()) {
      Integer w = 1;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (ge[i] < fe[i]) {
          ok = false;
          break;
        }
        e[i] = ge[i] - fe[i];
        for (int t = ge[i]; t > e[i]; --t) w *= t;
      }
      if (ok) out.add_term(e, fc * gc * w);
    }
  return out;
}

std::vector<Polynomial> aux_quadrics(const GenusOneModel& m) {
  require_degree5(m);
  return aux_quadrics_of(pfaffians(m));
}

EvaluationData evaluation_data(const GenusOneModel& m) {
  require_degree5(m);
  EvaluationData d;
  d.pfaffians = pfaffians(m);
  auto q = aux_quadrics_of(d.pfaffians);
  Polynomial r = r10_of(d.pfaffians);
  std::vector<Polynomial> inner;
  for (const auto& qi : q) inner.push_back(contract(qi, r));
  d.contracted.assign(5, Polynomial(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Polynomial linear = contract(q[j], inner[i]);
      Polynomial xx = x(i) * x(j);
      for (std::size_t k = 0; k < 5; ++k) {
        Exponents e(5, 0);
        e[k] = 1;
        Rational c = linear.coefficient(e);
        if (c != 0) d.contracted[k] += c * xx;
      }
    }
  return d;
}

RationalMatrix linear_syzygy_matrix(const std::vector<Polynomial>& quadrics) {
  if (quadrics.size() != 5) throw std::invalid_argument("five quadrics required");
  auto cubics = monomials_of_degree(5, 3);
  RationalMatrix m(cubics.size(), 25);
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t k = 0; k < 5; ++k) {
      auto v = coefficient_vector(x(k) * quadrics[j], cubics);
      for (std::size_t r = 0; r < cubics.size(); ++r) m(r, 5 * j + k) = v[r];
    }
  return m;
}

// The determinant of a random 21 x 21 minor of M(c) = c M1 + M0 is a
// polynomial of degree <= 21 vanishing wherever rank M(c) <= 20; it is
// recovered by interpolation and its rational roots are then checked by a
// full rank computation.
namespace {

bool drops_rank_at(const EvaluationData& data, const Rational& c) {
  std::vector<Polynomial> q = pencil_quadrics(data, c);
  return linear_syzygy_matrix(q).rank() == 20;
}

}  // namespace

std::vector<Rational> rank_drop_roots(const EvaluationData& data) {
  std::vector<Polynomial> p4, xs;
  for (std::size_t k = 0; k < 5; ++k) {
    p4.push_back(4 * data.pfaffians[k]);
    xs.push_back(Rational(-3, 16) * data.contracted[k]);
  }
  RationalMatrix m1 = linear_syzygy_matrix(p4), m0 = linear_syzygy_matrix(xs);
  const std::size_t size = 21;
  std::mt19937 rng(20231);
  std::uniform_int_distribution<long> sample(1000, 1000000);
  std::vector<std::size_t> rows(m1.rows()), cols(m1.cols());
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    // The matrices are sparse, so a blind choice of rows often gives a
    // minor that vanishes identically. Pick rows independent at a sample c.
    Rational c0(sample(rng), 7);
    RationalMatrix at_c0 = c0 * m1 + m0;
    std::vector<std::size_t> chosen;
    for (std::size_t r : rows) {
      RationalMatrix trial(chosen.size() + 1, size);
      for (std::size_t i = 0; i <= chosen.size(); ++i) {
        std::size_t src = i < chosen.size() ? chosen[i] : r;
        for (std::size_t j = 0; j < size; ++j) trial(i, j) = at_c0(src, cols[j]);
      }
      if (trial.rank() == chosen.size() + 1) chosen.push_back(r);
      if (chosen.size() == size) break;
    }
    if (chosen.size() < size) continue;
    std::vector<Rational> nodes, values;
    for (std::size_t t = 0; t <= size; ++t) {
      Rational c(static_cast<long>(t));
      RationalMatrix minor(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          minor(i, j) = c * m1(chosen[i], cols[j]) + m0(chosen[i], cols[j]);
      nodes.push_back(c);
      values.push_back(minor.determinant());
    }
    Univariate det = interpolate(nodes, values);
    std::vector<Rational> out;
    for (const auto& c : rational_roots(det))
      if ((c * m1 + m0).rank() == 20) out.push_back(c);
    return out;
  }
  throw MathError("no minor of size 21 is generically nonsingular: the model is singular");
}

GenusOneModel model_from_pfaffians(const std::vector<Polynomial>& quadrics) {
  auto [model, ratio] = reconstruct(quadrics);
  auto lambda = rational_sqrt(ratio);
  if (!lambda) throw MathError("Pfaffian scaling " + ratio.get_str() + " is not a rational square");
  return *lambda * model;
}

GenusOneModel model_from_quadric_basis(const std::vector<Polynomial>& quadrics, Rational* scale) {
  auto [model, ratio] = reconstruct(quadrics);
  if (scale) *scale = ratio;
  return model;
}

Rational joint_determinant(const GenusOneModel& m, const GenusOneModel& h) {
  require_degree5(m);
  require_degree5(h);
  RationalMatrix big(10, 10);
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t k = 0; k < 5; ++k) {
      big(r, k) = m.coefficients()[5 * r + k];
      big(r, 5 + k) = h.coefficients()[5 * r + k];
    }
  return big.determinant();
}

Degree5Analysis analyse_degree5(const GenusOneModel& m) {
  require_degree5(m);
  EvaluationData data = evaluation_data(m);
  auto roots = rank_drop_roots(data);
  if (roots.empty()) throw MathError("no rational rank-drop root: the model is singular");
  if (roots.size() > 1) throw MathError("several rank-drop roots; c4 is not determined");
  Rational c4 = roots[0];
  GenusOneModel h0 = model_from_pfaffians(pencil_quadrics(data, c4));
  Rational d = joint_determinant(m, h0) / 248832;
  if (d == 0) throw MathError("model and Hessian are dependent: the model is singular");

  struct Candidate {
    Invariants inv;
    int hsign;
  };
  std::vector<Candidate> candidates;
  for (int s : {1, -1}) {
    Rational disc = s * d;
    auto root = rational_sqrt(c4 * c4 * c4 - 1728 * disc);
    if (!root) continue;
    candidates.push_back({{c4, *root, disc}, s});
    if (*root != 0) candidates.push_back({{c4, -*root, disc}, s});
  }
  if (candidates.empty()) throw MathError("neither sign of the discriminant gives a rational c6");

  // The fibre m + t H has c4 = c4(1, t); only the right candidate predicts
  // a value at which that fibre's syzygy matrix drops rank.
  const auto& hp = hesse_polynomials(5);
  for (long t = 1; candidates.size() > 1 && t <= 8; ++t) {
    bool singular_fibre = std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& c) {
      return evaluate_form(hp.d, c.inv.c4, c.inv.c6, 1, t) == 0;
    });
    if (singular_fibre) continue;
    std::vector<Candidate> kept;
    for (int s : {1, -1}) {
      bool any = std::any_of(candidates.begin(), candidates.end(), [&](const Candidate& c) { return c.hsign == s; });
      if (!any) continue;
      EvaluationData fibre = evaluation_data(m + Rational(t * s) * h0);
      for (const auto& c : candidates)
        if (c.hsign == s && drops_rank_at(fibre, evaluate_form(hp.c4, c.inv.c4, c.inv.c6, 1, t))) kept.push_back(c);
    }
    candidates = std::move(kept);
  }
  if (candidates.size() != 1)
    throw MathError(candidates.empty() ? "no invariant candidate is consistent with the Hessian pencil"
                                       : "Hessian pencil does not separate the invariant candidates");
  return {candidates[0].inv, Rational(candidates[0].hsign) * h0};
}

Invariants invariants5(const GenusOneModel& m) { return analyse_degree5(m).invariants; }

GenusOneModel hessian5(const GenusOneModel& m) { return analyse_degree5(m).hessian; }

}  // namespace g1
