#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "crnkit/rational.hpp"

namespace crn {

using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals. Networks analyzed with crnkit are desk
/// scale (at most a few hundred reactions), so dense storage is deliberate.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const = default;

  RationalVector column(std::size_t j) const;
  RationalVector row(std::size_t i) const;
  /// [this | rhs] side by side; row counts must agree.
  RationalMatrix hcat(const RationalMatrix& rhs) const;
  RationalMatrix hcat(const RationalVector& col) const;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank via fraction-free (Bareiss) elimination over the integers
/// after clearing denominators row by row.
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form with pivot bookkeeping. Rows are normalized
/// after each pivot step, so `matrix` comes back with unit pivots.
struct RrefResult {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};
RrefResult rref(const RationalMatrix& m);

/// Canonical basis of the right null space {v : M v = 0}, one vector per free
/// column of the RREF, in ascending free-column order. Size is always
/// cols − rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Exact membership of v in span(basis). Throws on dimension mismatch.
bool member(const RationalVector& v, const std::vector<RationalVector>& span);

/// True iff the sum of the given subspaces is direct, i.e. the dimension of
/// the sum equals the sum of the dimensions. Spanning sets need not be
/// independent. Throws if ambient dimensions disagree.
bool sum_is_direct(const std::vector<std::vector<RationalVector>>& subspaces);

}  // namespace crn
