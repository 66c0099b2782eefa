#include "permrank/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "permrank/errors.hpp"

namespace permrank {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 1; k < indices_.size(); ++k) {
    if (indices_[k - 1] >= indices_[k]) {
      throw InputError("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(unsigned long long mask) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1ULL) v.push_back(k);
  }
  return IndexSet(std::move(v));
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InputError("matrix payload has " + std::to_string(data_.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix literal");
    for (long x : row) data.emplace_back(x);
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  return (*this)(i, j);
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) >= 0; });
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return is_integer(x); });
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Matrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    if (sgn((*this)(i, i)) != 0) return false;
  return true;
}

bool Matrix::entries_in_zero_pm1() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0 || x == 1 || x == -1; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::abs() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = ::abs(x);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix submatrix(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (!rows.fits(a.rows()) || !cols.fits(a.cols())) {
    throw InputError("submatrix index out of range");
  }
  Matrix s(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = a(rows[r], cols[c]);
  return s;
}

IntegerRows clear_row_denominators(const Matrix& a) {
  IntegerRows out;
  out.rows = a.rows();
  out.cols = a.cols();
  out.entries.resize(a.rows() * a.cols());
  out.row_scale.assign(a.rows(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (const auto& x : a.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      out.entries[i * a.cols() + j] = x.get_num() * (l / x.get_den());
    }
    out.row_scale[i] = l;
    out.scale *= l;
  }
  return out;
}

std::size_t rank_exact(const Matrix& a) {
  // Row scaling by nonzero integers preserves rank.
  IntegerRows m = clear_row_denominators(a);
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  auto& e = m.entries;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return e[i * cols + j]; };

  std::size_t rank = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(at(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) swap(at(pivot, j), at(rank, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = at(i, j) * at(rank, c) - at(i, c) * at(rank, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

PsdResult psd_check(const Matrix& a) {
  if (!a.is_square()) throw InputError("psd_check needs a square matrix");
  if (!a.is_symmetric()) throw InputError("psd_check needs a symmetric matrix");

  std::vector<Rational> work = a.entries();
  std::size_t n = a.rows();
  while (n > 0) {
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return work[i * n + j]; };

    std::size_t pivot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(at(i, i)) < 0) return {false, "negative diagonal entry"};
      if (at(i, i) > at(pivot, pivot)) pivot = i;
    }
    if (sgn(at(pivot, pivot)) == 0) {
      for (const auto& x : work) {
        if (sgn(x) != 0) return {false, "zero diagonal entry with nonzero off-diagonal entry"};
      }
      return {true, {}};
    }

    // Schur complement of the pivot.
    std::vector<Rational> next;
    next.reserve((n - 1) * (n - 1));
    const Rational& p = at(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      Rational f = at(i, pivot) / p;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        next.push_back(at(i, j) - f * at(pivot, j));
      }
    }
    work = std::move(next);
    --n;
  }
  return {true, {}};
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(a(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace permrank
