#include "crnkit/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace crn {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_)
      throw std::invalid_argument("ragged initializer for RationalMatrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(
    const std::vector<RationalVector>& cols) {
  if (cols.empty()) return RationalMatrix(0, 0);
  const std::size_t rows = cols.front().size();
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("columns of unequal length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  RationalVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_)
    throw std::invalid_argument("hcat row count mismatch");
  RationalMatrix m(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      m.at(i, cols_ + j) = rhs.at(i, j);
  }
  return m;
}

RationalMatrix RationalMatrix::hcat(const RationalVector& col) const {
  return hcat(from_columns({col}));
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q == 0; });
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators per row, then run Bareiss fraction-free elimination.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res;
  res.matrix = m;
  RationalMatrix& a = res.matrix;
  const std::size_t rows = a.rows(), cols = a.cols();

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a.at(r, j), a.at(pivot, j));

    const Rational inv = 1 / a.at(r, col);
    for (std::size_t j = col; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      const Rational factor = a.at(i, col);
      for (std::size_t j = col; j < cols; ++j)
        a.at(i, j) -= factor * a.at(r, j);
    }
    res.pivot_columns.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  const RrefResult e = rref(m);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivot_columns) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
      v[e.pivot_columns[i]] = -e.matrix.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool member(const RationalVector& v, const std::vector<RationalVector>& span) {
  for (const auto& b : span)
    if (b.size() != v.size())
      throw std::invalid_argument("member: dimension mismatch");
  if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }))
    return true;
  if (span.empty()) return false;

  // v is in the span iff [B | v] is inconsistent-free, i.e. no pivot lands
  // in the appended column.
  RationalMatrix aug = RationalMatrix::from_columns(span).hcat(v);
  const RrefResult e = rref(aug);
  return e.pivot_columns.empty() || e.pivot_columns.back() != span.size();
}

bool sum_is_direct(const std::vector<std::vector<RationalVector>>& subspaces) {
  std::size_t ambient = 0;
  bool seen = false;
  std::vector<RationalVector> all;
  std::size_t dim_sum = 0;
  for (const auto& s : subspaces) {
    for (const auto& b : s) {
      if (!seen) {
        ambient = b.size();
        seen = true;
      } else if (b.size() != ambient) {
        throw std::invalid_argument("sum_is_direct: dimension mismatch");
      }
      all.push_back(b);
    }
    dim_sum += s.empty() ? 0 : rank(RationalMatrix::from_columns(s));
  }
  if (all.empty()) return true;
  return rank(RationalMatrix::from_columns(all)) == dim_sum;
}

}  // namespace crn
