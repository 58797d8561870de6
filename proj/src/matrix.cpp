#include "g1/matrix.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace g1 {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Each row scaled to a primitive integer vector.
IntRows integer_rows(const RationalMatrix& m) {
  IntRows out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
  IntRows rows;                    // reduced rows, pivot rows first
  std::vector<std::size_t> pivots; // pivot column of row r
};

// Integer Gauss-Jordan elimination. Pivot: largest absolute value in the
// column, ties to the lowest row index. Rows are kept primitive.
Echelon integer_echelon(IntRows rows, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (best == rows.size() || abs(rows[i][c]) > abs(rows[best][c])) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    const Integer piv = rows[r][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), rows[i][c].get_mpz_t());
      Integer fi = piv / g, fr = rows[i][c] / g;
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = fi * rows[i][j] - fr * rows[r][j];
      make_primitive(rows[i]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  RationalMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::diagonal(const Vector& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector RationalMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RationalMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  RationalMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

Vector operator*(const RationalMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector r(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (v[j] != 0) r[i] += a(i, j) * v[j];
  return r;
}

// Fraction-free forward elimination: every entry stays a minor of the
// input, so no gcds are needed and sizes stay bounded.
std::size_t RationalMatrix::rank() const {
  IntRows m = integer_rows(*this);
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t best = rows_;
    for (std::size_t i = r; i < rows_; ++i) {
      if (m[i][c] == 0) continue;
      if (best == rows_ || abs(m[i][c]) > abs(m[best][c])) best = i;
    }
    if (best == rows_) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<Vector> RationalMatrix::nullspace() const {
  Echelon e = integer_echelon(integer_rows(*this), cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Integer l = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rows[r][e.pivots[r]].get_mpz_t());

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> v(cols_, Integer(0));
    v[f] = l;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -(l / e.rows[r][e.pivots[r]]) * e.rows[r][f];
    make_primitive(v);
    basis.emplace_back(v.begin(), v.end());
  }
  return basis;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Scale rows to integers, run Bareiss, undo the scaling.
  Rational scale = 1;
  IntRows m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j).get_num() * (l / (*this)(i, j).get_den());
    scale *= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k] == 0) continue;
      if (best == n || abs(m[i][k]) > abs(m[best][k])) best = i;
    }
    if (best == n) return 0;
    if (best != k) {
      std::swap(m[k], m[best]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d(m[n - 1][n - 1] * sign);
  d /= scale;
  return d;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = integer_echelon(integer_rows(aug), 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw MathError("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    Rational piv(e.rows[r][r]);
    for (std::size_t j = 0; j < n; ++j) inv(r, j) = Rational(e.rows[r][n + j]) / piv;
  }
  return inv;
}

std::optional<Vector> RationalMatrix::solve(const Vector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side has wrong length");
  RationalMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  Echelon e = integer_echelon(integer_rows(aug), cols_ + 1);
  Vector x(cols_, Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t c = e.pivots[r];
    if (c == cols_) return std::nullopt;
    x[c] = Rational(e.rows[r][cols_]) / Rational(e.rows[r][c]);
  }
  return x;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Polynomial(nvars)) {}

namespace {

Polynomial laplace(const PolyMatrix& m, std::size_t row, unsigned used,
                   std::map<std::pair<std::size_t, unsigned>, Polynomial>& memo) {
  std::size_t n = m.rows();
  if (row == n) return Polynomial(m.nvars(), Rational(1));
  auto key = std::make_pair(row, used);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Polynomial total(m.nvars());
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1u << j)) continue;
    if (!m(row, j).is_zero()) {
      Polynomial minor = laplace(m, row + 1, used | (1u << j), memo);
      if (!minor.is_zero()) {
        Polynomial t = m(row, j) * minor;
        if (sign > 0) total += t;
        else total -= t;
      }
    }
    sign = -sign;
  }
  memo.emplace(key, total);
  return total;
}

Polynomial bareiss(PolyMatrix m) {
  std::size_t n = m.rows();
  Polynomial prev(m.nvars(), Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (best == n || m(i, k).size() < m(best, k).size()) best = i;
    }
    if (best == n) return Polynomial(m.nvars());
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).divide_exact(prev);
      m(i, k) = Polynomial(m.nvars());
    }
    prev = m(k, k);
  }
  Polynomial d = m(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

Polynomial PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial(nvars_, Rational(1));
  if (rows_ <= 5) {
    std::map<std::pair<std::size_t, unsigned>, Polynomial> memo;
    return laplace(*this, 0, 0u, memo);
  }
  return bareiss(*this);
}

PolyMatrix PolyMatrix::adjugate() const {
  if (rows_ != cols_) throw std::invalid_argument("adjugate of a non-square matrix");
  std::size_t n = rows_;
  PolyMatrix adj(n, n, nvars_);
  if (n == 1) {
    adj(0, 0) = Polynomial(nvars_, Rational(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1, nvars_);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = (*this)(r, c);
        }
        ++rr;
      }
      Polynomial d = minor.determinant();
      adj(j, i) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

}  // namespace g1
