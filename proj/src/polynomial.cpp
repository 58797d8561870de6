#include "g1/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace g1 {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {}

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_.emplace(Exponents(nvars, 0), constant);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& coeff) {
  Polynomial p(exps.size());
  if (coeff != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Polynomial::degree_in(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(a.nvars_);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(nvars_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * e[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_)
    throw std::invalid_argument("substitute needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw std::invalid_argument("substitution images differ in variable count");

  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power_of = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t(target, c);
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i)
      if (e[i] > 0) t *= power_of(i, e[i]);
    r += t;
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational r = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= power(point[i], e[i]);
    r += t;
  }
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw MathError("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  Polynomial remainder = *this;
  Polynomial quotient(nvars_);
  Exponents shift(nvars_);
  while (!remainder.is_zero()) {
    const auto& [e, c] = *remainder.terms_.begin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      shift[i] = e[i] - lead_e[i];
      if (shift[i] < 0) throw MathError("inexact polynomial division");
    }
    Rational k = c / lead_c;
    quotient.add_term(shift, k);
    for (const auto& [de, dc] : divisor.terms_) {
      Exponents m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = de[i] + shift[i];
      remainder.add_term(m, -k * dc);
    }
  }
  return quotient;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) r.terms_.emplace(e, c);
  return r;
}

std::map<Exponents, Polynomial> Polynomial::split(const std::vector<std::size_t>& outer) const {
  std::vector<bool> is_outer(nvars_, false);
  for (auto v : outer) {
    if (v >= nvars_) throw std::out_of_range("variable index out of range");
    is_outer[v] = true;
  }
  std::size_t inner_count = nvars_ - outer.size();
  std::map<Exponents, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents key(outer.size());
    for (std::size_t k = 0; k < outer.size(); ++k) key[k] = e[outer[k]];
    Exponents rest;
    rest.reserve(inner_count);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (!is_outer[i]) rest.push_back(e[i]);
    auto [it, inserted] = out.try_emplace(key, inner_count);
    it->second.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::remap(std::size_t new_nvars, const std::vector<std::size_t>& target) const {
  if (target.size() != nvars_) throw std::invalid_argument("remap needs one target per variable");
  Polynomial r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents m(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (target[i] >= new_nvars) throw std::out_of_range("remap target out of range");
      m[target[i]] += e[i];
    }
    r.add_term(m, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() < nvars_) throw std::invalid_argument("not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
    bool wrote = false;
    if (mag != 1 || !has_var) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << names[i];
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial exact_root(const Polynomial& p, unsigned k) {
  if (k == 0) throw std::invalid_argument("root of order zero");
  if (p.is_zero() || k == 1) return p;
  std::size_t n = p.nvars();
  int min_degree = p.total_degree();
  for (const auto& [e, c] : p.terms())
    min_degree = std::min(min_degree, std::accumulate(e.begin(), e.end(), 0));

  const auto& [lead_e, lead_c] = *p.terms().begin();
  Exponents root_e(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lead_e[i] % static_cast<int>(k) != 0) throw MathError("polynomial is not a perfect power");
    root_e[i] = lead_e[i] / static_cast<int>(k);
  }
  std::optional<Rational> root_c;
  if (k == 2) root_c = rational_sqrt(lead_c);
  else if (k == 3) root_c = rational_cbrt(lead_c);
  else throw std::invalid_argument("exact_root supports square and cube roots");
  if (!root_c) throw MathError("leading coefficient is not a perfect power");

  Polynomial root = Polynomial::monomial(root_e, *root_c);
  // k * LT(root)^(k-1) divides the leading term of each residual.
  Polynomial lead = Polynomial::monomial(root_e, *root_c).pow(k - 1) * Rational(k);
  const auto& [le, lc] = *lead.terms().begin();
  for (;;) {
    Polynomial residual = p - root.pow(k);
    if (residual.is_zero()) return root;
    const auto& [re, rc] = *residual.terms().begin();
    Exponents next(n);
    int next_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = re[i] - le[i];
      if (next[i] < 0) throw MathError("polynomial is not a perfect power");
      next_degree += next[i];
    }
    if (static_cast<long>(next_degree) * k < static_cast<long>(min_degree))
      throw MathError("polynomial is not a perfect power");
    root.add_term(next, rc / lc);
  }
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Enumerate in lexicographically descending order, which is the grlex
  // order within a single degree.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Rational> coefficient_vector(const Polynomial& p, const std::vector<Exponents>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  std::size_t found = 0;
  for (const auto& e : basis) {
    Rational c = p.coefficient(e);
    if (c != 0) ++found;
    v.push_back(c);
  }
  if (found != p.size()) throw MathError("polynomial has terms outside the monomial basis");
  return v;
}

}  // namespace g1

namespace g1 {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial total(names_.size());
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        if (text_[pos_] == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      total += sign * term();
      skip();
    }
    return total;
  }

 private:
  Polynomial term() {
    Polynomial t(names_.size(), Rational(1));
    bool need_factor = true;
    while (need_factor) {
      t *= factor();
      skip();
      need_factor = pos_ < text_.size() && text_[pos_] == '*';
      if (need_factor) {
        ++pos_;
        skip();
      }
    }
    return t;
  }

  Polynomial factor() {
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
        ++pos_;
      try {
        return Polynomial(names_.size(), parse_rational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a number or variable");
    std::size_t index = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) index = i;
    if (index == names_.size()) {
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    Polynomial v = Polynomial::variable(names_.size(), index);
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      std::size_t e0 = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (e0 == pos_) fail("expected an exponent");
      v = v.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(e0, pos_ - e0)))));
    }
    return v;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("offset " + std::to_string(pos_ + 1) + ": " + message);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names).parse();
}

}  // namespace g1
