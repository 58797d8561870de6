#include "g1/model.hpp"

#include <sstream>

#include "g1/degree5.hpp"

namespace g1 {

namespace {

void check_degree(int degree) {
  if (degree < 2 || degree > 5) throw std::invalid_argument("model degree must be 2, 3, 4 or 5");
}

const std::vector<Exponents>& form_monomials(int degree) {
  static const std::vector<Exponents> quartic = monomials_of_degree(2, 4);
  static const std::vector<Exponents> cubic = monomials_of_degree(3, 3);
  return degree == 2 ? quartic : cubic;
}

Polynomial form_of(const GenusOneModel& m) {
  const auto& mons = form_monomials(m.degree());
  Polynomial f(mons.front().size());
  for (std::size_t k = 0; k < mons.size(); ++k) f.add_term(mons[k], m.coefficients()[k]);
  return f;
}

RationalMatrix symmetric_from_quadric(const Polynomial& q) {
  if (q.nvars() != 4) throw std::invalid_argument("quadric must be in 4 variables");
  RationalMatrix a(4, 4);
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() != 2) throw std::invalid_argument("quadric must be homogeneous of degree 2");
    if (idx[0] == idx[1]) a(idx[0], idx[0]) = 2 * c;
    else a(idx[0], idx[1]) = a(idx[1], idx[0]) = c;
  }
  return a;
}

Polynomial quadric_of(const RationalMatrix& a) {
  Polynomial q(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Exponents e(4, 0);
      e[i] += 1;
      e[j] += 1;
      q.add_term(e, i == j ? a(i, i) / 2 : a(i, j));
    }
  return q;
}

}  // namespace

std::size_t coefficient_count(int degree) {
  check_degree(degree);
  static const std::size_t counts[] = {5, 10, 20, 50};
  return counts[degree - 2];
}

std::size_t variable_count(int degree) {
  check_degree(degree);
  return degree == 2 ? 2 : degree == 3 ? 3 : static_cast<std::size_t>(degree);
}

std::vector<std::string> variable_names(int degree) {
  check_degree(degree);
  if (degree == 2) return {"x", "z"};
  if (degree == 3) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 1; i <= degree; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

const std::array<std::pair<int, int>, 10>& alternating_pairs() {
  static const std::array<std::pair<int, int>, 10> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  return pairs;
}

GenusOneModel GenusOneModel::zero(int degree) {
  return from_coefficients(degree, std::vector<Rational>(coefficient_count(degree), Rational(0)));
}

GenusOneModel GenusOneModel::from_coefficients(int degree, std::vector<Rational> coeffs) {
  if (coeffs.size() != coefficient_count(degree))
    throw std::invalid_argument("wrong number of model coefficients");
  GenusOneModel m;
  m.degree_ = degree;
  m.coeffs_ = std::move(coeffs);
  return m;
}

GenusOneModel GenusOneModel::quartic(const Polynomial& f) {
  if (f.nvars() != 2) throw std::invalid_argument("quartic must be in 2 variables");
  return from_coefficients(2, coefficient_vector(f, form_monomials(2)));
}

GenusOneModel GenusOneModel::cubic(const Polynomial& f) {
  if (f.nvars() != 3) throw std::invalid_argument("cubic must be in 3 variables");
  return from_coefficients(3, coefficient_vector(f, form_monomials(3)));
}

GenusOneModel GenusOneModel::quadrics(const RationalMatrix& a, const RationalMatrix& b) {
  for (const auto* m : {&a, &b})
    if (m->rows() != 4 || m->cols() != 4 || !m->is_symmetric())
      throw std::invalid_argument("degree-4 model needs two symmetric 4x4 matrices");
  std::vector<Rational> c;
  for (const auto* m : {&a, &b})
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) c.push_back((*m)(i, j));
  return from_coefficients(4, std::move(c));
}

GenusOneModel GenusOneModel::quadrics(const Polynomial& q1, const Polynomial& q2) {
  return quadrics(symmetric_from_quadric(q1), symmetric_from_quadric(q2));
}

GenusOneModel GenusOneModel::alternating(const std::vector<Polynomial>& upper) {
  if (upper.size() != 10) throw std::invalid_argument("alternating model needs ten linear forms");
  std::vector<Rational> c;
  for (const auto& f : upper) {
    if (f.nvars() != 5) throw std::invalid_argument("linear forms must be in 5 variables");
    auto row = coefficient_vector(f, monomials_of_degree(5, 1));
    c.insert(c.end(), row.begin(), row.end());
  }
  return from_coefficients(5, std::move(c));
}

bool GenusOneModel::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

RationalMatrix GenusOneModel::quadric_matrix(int k) const {
  if (degree_ != 4 || k < 0 || k > 1) throw std::invalid_argument("quadric_matrix needs a degree-4 model");
  RationalMatrix a(4, 4);
  std::size_t pos = 10 * static_cast<std::size_t>(k);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) a(i, j) = a(j, i) = coeffs_[pos++];
  return a;
}

PolyMatrix GenusOneModel::alternating_matrix() const {
  if (degree_ != 5) throw std::invalid_argument("alternating_matrix needs a degree-5 model");
  PolyMatrix m(5, 5, 5);
  const auto& pairs = alternating_pairs();
  for (std::size_t r = 0; r < 10; ++r) {
    Polynomial f(5);
    for (std::size_t k = 0; k < 5; ++k) f += coeffs_[5 * r + k] * Polynomial::variable(5, k);
    auto [i, j] = pairs[r];
    m(i, j) = f;
    m(j, i) = -f;
  }
  return m;
}

RationalMatrix GenusOneModel::alternating_slice(int k) const {
  if (degree_ != 5 || k < 0 || k > 4) throw std::invalid_argument("alternating_slice needs a degree-5 model");
  RationalMatrix s(5, 5);
  const auto& pairs = alternating_pairs();
  for (std::size_t r = 0; r < 10; ++r) {
    auto [i, j] = pairs[r];
    s(i, j) = coeffs_[5 * r + static_cast<std::size_t>(k)];
    s(j, i) = -s(i, j);
  }
  return s;
}

GenusOneModel& GenusOneModel::operator+=(const GenusOneModel& other) {
  if (degree_ != other.degree_) throw std::invalid_argument("model degree mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

GenusOneModel operator*(const Rational& s, GenusOneModel m) {
  for (auto& c : m.coeffs_) c *= s;
  return m;
}

Transformation Transformation::identity(int degree) {
  check_degree(degree);
  if (degree <= 3) return scalar_matrix(degree, 1, RationalMatrix::identity(variable_count(degree)));
  return matrix_pair(degree, RationalMatrix::identity(degree == 4 ? 2 : 5),
                     RationalMatrix::identity(variable_count(degree)));
}

Transformation Transformation::scalar_matrix(int degree, const Rational& scalar, const RationalMatrix& b) {
  if (degree != 2 && degree != 3) throw std::invalid_argument("scalar form needs degree 2 or 3");
  std::size_t n = variable_count(degree);
  if (b.rows() != n || b.cols() != n) throw std::invalid_argument("transformation matrix has wrong size");
  Transformation g;
  g.degree = degree;
  g.scalar = scalar;
  g.b = b;
  return g;
}

Transformation Transformation::matrix_pair(int degree, const RationalMatrix& a, const RationalMatrix& b) {
  if (degree != 4 && degree != 5) throw std::invalid_argument("matrix pair needs degree 4 or 5");
  std::size_t na = degree == 4 ? 2 : 5;
  if (a.rows() != na || a.cols() != na || b.rows() != variable_count(degree) || b.cols() != variable_count(degree))
    throw std::invalid_argument("transformation matrix has wrong size");
  Transformation g;
  g.degree = degree;
  g.a = a;
  g.b = b;
  return g;
}

Transformation Transformation::transpose() const {
  Transformation t = *this;
  t.b = b.transpose();
  if (degree >= 4) t.a = a.transpose();
  return t;
}

Transformation Transformation::inverse() const {
  Transformation t = *this;
  t.b = b.inverse();
  if (degree >= 4) t.a = a.inverse();
  else {
    if (scalar == 0) throw MathError("transformation scalar is zero");
    t.scalar = 1 / scalar;
  }
  return t;
}

Transformation compose(const Transformation& g, const Transformation& h) {
  if (g.degree != h.degree) throw std::invalid_argument("transformation degree mismatch");
  Transformation r = g;
  r.b = g.b * h.b;
  if (g.degree >= 4) r.a = g.a * h.a;
  else r.scalar = g.scalar * h.scalar;
  return r;
}

Rational det_character(const Transformation& g) {
  Rational db = g.b.determinant();
  switch (g.degree) {
    case 2:
    case 3: return g.scalar * db;
    case 4: return g.a.determinant() * db;
    case 5: {
      Rational da = g.a.determinant();
      return da * da * db;
    }
  }
  throw std::invalid_argument("transformation degree must be 2, 3, 4 or 5");
}

GenusOneModel act(const Transformation& g, const GenusOneModel& m) {
  if (g.degree != m.degree()) throw std::invalid_argument("transformation and model degrees differ");
  if (g.b.determinant() == 0) throw MathError("transformation matrix is singular");
  switch (m.degree()) {
    case 2:
    case 3: {
      if (g.scalar == 0) throw MathError("transformation scalar is zero");
      std::size_t n = variable_count(m.degree());
      std::vector<Polynomial> images;
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial img(n);
        for (std::size_t i = 0; i < n; ++i) img += g.b(i, j) * Polynomial::variable(n, i);
        images.push_back(img);
      }
      Rational s = m.degree() == 2 ? g.scalar * g.scalar : g.scalar;
      Polynomial f = s * form_of(m).substitute(images);
      return m.degree() == 2 ? GenusOneModel::quartic(f) : GenusOneModel::cubic(f);
    }
    case 4: {
      if (g.a.determinant() == 0) throw MathError("transformation matrix is singular");
      RationalMatrix bt = g.b.transpose();
      RationalMatrix m0 = g.b * m.quadric_matrix(0) * bt;
      RationalMatrix m1 = g.b * m.quadric_matrix(1) * bt;
      return GenusOneModel::quadrics(g.a(0, 0) * m0 + g.a(0, 1) * m1, g.a(1, 0) * m0 + g.a(1, 1) * m1);
    }
    case 5: {
      if (g.a.determinant() == 0) throw MathError("transformation matrix is singular");
      std::vector<RationalMatrix> slices;
      for (int k = 0; k < 5; ++k) slices.push_back(m.alternating_slice(k));
      RationalMatrix at = g.a.transpose();
      std::vector<Rational> c(50, Rational(0));
      for (int i = 0; i < 5; ++i) {
        RationalMatrix n(5, 5);
        for (int k = 0; k < 5; ++k)
          if (g.b(i, k) != 0) n = n + g.b(i, k) * slices[k];
        n = g.a * n * at;
        const auto& pairs = alternating_pairs();
        for (std::size_t r = 0; r < 10; ++r) c[5 * r + i] = n(pairs[r].first, pairs[r].second);
      }
      return GenusOneModel::from_coefficients(5, std::move(c));
    }
  }
  throw std::invalid_argument("model degree must be 2, 3, 4 or 5");
}

std::vector<Polynomial> components(const GenusOneModel& m) {
  switch (m.degree()) {
    case 2:
    case 3: return {form_of(m)};
    case 4: return {quadric_of(m.quadric_matrix(0)), quadric_of(m.quadric_matrix(1))};
    case 5: {
      std::vector<Polynomial> out;
      for (std::size_t r = 0; r < 10; ++r) {
        Polynomial f(5);
        for (std::size_t k = 0; k < 5; ++k) f += m.coefficients()[5 * r + k] * Polynomial::variable(5, k);
        out.push_back(f);
      }
      return out;
    }
  }
  throw std::invalid_argument("model degree must be 2, 3, 4 or 5");
}

std::vector<Polynomial> equations(const GenusOneModel& m) {
  if (m.degree() == 5) return pfaffians(m);
  return components(m);
}

Rational apolar_pairing(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("pairing variable-count mismatch");
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational d = g.coefficient(e);
    if (d == 0) continue;
    Integer w = 1;
    for (int k : e) {
      Integer fk;
      mpz_fac_ui(fk.get_mpz_t(), static_cast<unsigned long>(k));
      w *= fk;
    }
    total += c * d * w;
  }
  return total;
}

Rational pairing(const GenusOneModel& m1, const GenusOneModel& m2) {
  if (m1.degree() != m2.degree()) throw std::invalid_argument("pairing needs models of equal degree");
  auto f = components(m1), g = components(m2);
  Rational total = 0;
  for (std::size_t k = 0; k < f.size(); ++k) total += apolar_pairing(f[k], g[k]);
  return total;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
  }
  return lines;
}

class LineReader {
 public:
  explicit LineReader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const std::string& expecting) {
    if (pos_ >= lines_.size()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(last, 1, "unexpected end of document, expected " + expecting);
    }
    return lines_[pos_++];
  }

  void expect_end() const {
    if (pos_ < lines_.size()) throw ParseError(lines_[pos_].number, 1, "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void expect_keyword(const Line& line, const std::string& keyword, std::size_t values) {
  if (line.tokens[0].text != keyword)
    throw ParseError(line.number, line.tokens[0].column, "expected '" + keyword + "'");
  if (line.tokens.size() != values + 1)
    throw ParseError(line.number, line.tokens.back().column,
                     "'" + keyword + "' expects " + std::to_string(values) + " values");
}

std::vector<Rational> parse_values(const Line& line, std::size_t first, std::size_t count) {
  if (line.tokens.size() != first + count)
    throw ParseError(line.number, line.tokens.back().column, "expected " + std::to_string(count) + " values");
  std::vector<Rational> out;
  for (std::size_t k = first; k < line.tokens.size(); ++k) {
    try {
      out.push_back(parse_rational(line.tokens[k].text));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, line.tokens[k].column, e.what());
    }
  }
  return out;
}

RationalMatrix parse_matrix(LineReader& reader, const std::string& keyword) {
  const Line& head = reader.next("'" + keyword + "'");
  expect_keyword(head, keyword, 0);
  RationalMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    auto row = parse_values(reader.next("matrix row"), 0, 4);
    for (int j = 0; j < 4; ++j) m(i, j) = row[j];
  }
  if (!m.is_symmetric()) throw ParseError(head.number, 1, keyword + " is not symmetric");
  return m;
}

}  // namespace

GenusOneModel parse_model(std::string_view text) {
  LineReader reader(tokenize(text));
  const Line& magic = reader.next("header");
  if (magic.tokens.size() != 2 || magic.tokens[0].text != "genus1model" || magic.tokens[1].text != "v1")
    throw ParseError(magic.number, 1, "expected header 'genus1model v1'");
  const Line& deg = reader.next("'degree'");
  expect_keyword(deg, "degree", 1);
  int degree = 0;
  const std::string& dt = deg.tokens[1].text;
  if (dt == "2" || dt == "3" || dt == "4" || dt == "5") degree = dt[0] - '0';
  else throw ParseError(deg.number, deg.tokens[1].column, "degree must be 2, 3, 4 or 5");

  GenusOneModel m;
  if (degree <= 3) {
    const Line& line = reader.next("'coeffs'");
    std::size_t count = coefficient_count(degree);
    expect_keyword(line, "coeffs", count);
    m = GenusOneModel::from_coefficients(degree, parse_values(line, 1, count));
  } else if (degree == 4) {
    RationalMatrix a = parse_matrix(reader, "matrixA");
    RationalMatrix b = parse_matrix(reader, "matrixB");
    m = GenusOneModel::quadrics(a, b);
  } else {
    expect_keyword(reader.next("'rows'"), "rows", 0);
    std::vector<Rational> c;
    for (int r = 0; r < 10; ++r) {
      auto row = parse_values(reader.next("matrix row"), 0, 5);
      c.insert(c.end(), row.begin(), row.end());
    }
    m = GenusOneModel::from_coefficients(5, std::move(c));
  }
  reader.expect_end();
  return m;
}

std::string serialize_model(const GenusOneModel& m) {
  std::ostringstream out;
  out << "genus1model v1\n" << "degree " << m.degree() << "\n";
  auto write_row = [&](auto begin, auto end) {
    for (auto it = begin; it != end; ++it) out << (it == begin ? "" : " ") << it->get_str();
    out << "\n";
  };
  const auto& c = m.coefficients();
  switch (m.degree()) {
    case 2:
    case 3:
      out << "coeffs ";
      write_row(c.begin(), c.end());
      break;
    case 4:
      for (int k = 0; k < 2; ++k) {
        out << (k == 0 ? "matrixA\n" : "matrixB\n");
        RationalMatrix a = m.quadric_matrix(k);
        for (int i = 0; i < 4; ++i) {
          auto row = a.row(i);
          write_row(row.begin(), row.end());
        }
      }
      break;
    case 5:
      out << "rows\n";
      for (std::size_t r = 0; r < 10; ++r) write_row(c.begin() + 5 * r, c.begin() + 5 * r + 5);
      break;
    default: throw std::invalid_argument("cannot serialize an empty model");
  }
  return out.str();
}

}  // namespace g1

namespace g1 {

Transformation scaling_transformation(int degree, const Rational& s) {
  if (s == 0) throw std::invalid_argument("scaling by zero");
  std::size_t nb = variable_count(degree);
  if (degree <= 3) return Transformation::scalar_matrix(degree, s, RationalMatrix::identity(nb));
  Vector diag(degree == 4 ? 2 : 5, Rational(1));
  diag[0] = s;
  if (degree == 4) return Transformation::matrix_pair(4, RationalMatrix::diagonal(diag), RationalMatrix::identity(4));
  return Transformation::matrix_pair(5, RationalMatrix::identity(5), RationalMatrix::diagonal(diag));
}

std::optional<Rational> weight_scale(const Invariants& from, const Invariants& to) {
  if ((from.c4 == 0) != (to.c4 == 0) || (from.c6 == 0) != (to.c6 == 0)) return std::nullopt;
  if (from.c4 == 0 && from.c6 == 0) return std::nullopt;
  std::optional<Rational> s2;
  if (from.c4 == 0) {
    s2 = rational_cbrt(to.c6 / from.c6);
  } else if (from.c6 == 0) {
    s2 = rational_sqrt(to.c4 / from.c4);
  } else {
    s2 = (to.c6 / from.c6) / (to.c4 / from.c4);
  }
  if (!s2 || *s2 <= 0) return std::nullopt;
  auto s = rational_sqrt(*s2);
  if (!s) return std::nullopt;
  if (power(*s, 4) * from.c4 != to.c4 || power(*s, 6) * from.c6 != to.c6) return std::nullopt;
  return s;
}

}  // namespace g1
