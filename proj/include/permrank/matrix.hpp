#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "permrank/scalar.hpp"

namespace permrank {

/// Strictly increasing list of 0-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws InputError unless `indices` is strictly increasing.
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices)
      : IndexSet(std::vector<std::size_t>(indices)) {}

  /// {0, 1, ..., n-1}
  static IndexSet range(std::size_t n);
  /// Indices of the set bits of `mask`.
  static IndexSet from_mask(unsigned long long mask);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t>& values() const { return indices_; }
  /// True when every index is < bound.
  bool fits(std::size_t bound) const { return indices_.empty() || indices_.back() < bound; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Convenience for literals: Matrix::from_rows({{0, 1}, {0, 0}}).
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(const std::vector<std::vector<long>>& rows);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws InputError.
  const Rational& at(std::size_t i, std::size_t j) const;

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return data_; }

  bool is_symmetric() const;
  bool is_nonnegative() const;
  bool is_integral() const;
  bool is_zero() const;
  bool has_zero_diagonal() const;
  /// Every entry lies in {0, 1, -1}.
  bool entries_in_zero_pm1() const;

  Matrix transpose() const;
  /// Entry-wise absolute value.
  Matrix abs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);

/// Rows indexed by `rows`, columns by `cols`, in order. Throws InputError on
/// an out-of-range index.
Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols);

/// Classical rank, computed exactly by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const Matrix& a);

struct PsdResult {
  bool psd = false;
  /// Empty when psd; otherwise the obstruction that was found.
  std::string reason;
};

/// Exact positive-semidefiniteness test by recursive pivoted Schur
/// complements. Throws InputError for non-square or non-symmetric input.
PsdResult psd_check(const Matrix& a);

/// Integer matrix obtained by clearing denominators row by row: row i is
/// multiplied by the lcm of its denominators, and `scale` is the product of
/// those multipliers.
struct IntegerRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;  // row-major
  std::vector<Integer> row_scale;
  Integer scale = 1;

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

IntegerRows clear_row_denominators(const Matrix& a);

std::string to_string(const Matrix& a);

}  // namespace permrank
