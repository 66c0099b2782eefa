#include "permrank/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "permrank/errors.hpp"
#include "permrank/permanent.hpp"

namespace permrank {

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& c : coeffs_) acc = acc * x + c;
  return acc;
}

std::size_t Polynomial::zero_root_multiplicity() const {
  std::size_t k = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend() && sgn(*it) == 0; ++it) ++k;
  return k;
}

Polynomial Polynomial::negated() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char var) const {
  std::ostringstream os;
  bool first = true;
  const std::size_t deg = degree_bound();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const std::size_t power = deg - i;
    const Rational mag = ::abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || power == 0) os << permrank::to_string(mag);
    if (power >= 1) os << var;
    if (power >= 2) os << '^' << power;
  }
  return first ? "0" : os.str();
}

std::string Polynomial::coefficient_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << permrank::to_string(coeffs_[i]);
  }
  os << ']';
  return os.str();
}

namespace {

// Ascending-power integer coefficients of
// sum_{k in [first, last)} (-1)^|S_k| prod_i (row_scale_i [i in S_k] x - sum_{j in S_k} m(i, j)).
std::vector<Integer> ryser_poly_partial(const IntegerRows& m, std::uint64_t first,
                                        std::uint64_t last) {
  const std::size_t n = m.rows;
  std::vector<Integer> total(n + 1, 0);
  if (first >= last) return total;

  std::vector<Integer> constant(n, 0);  // -sum_{j in S} m(i, j)
  std::vector<Integer> product(n + 1);
  Integer tmp;

  const std::uint64_t start = first ^ (first >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (!((start >> j) & 1)) continue;
    for (std::size_t i = 0; i < n; ++i) constant[i] -= m(i, j);
  }

  for (std::uint64_t k = first; k < last; ++k) {
    const std::uint64_t set = k ^ (k >> 1);
    if (k != first) {
      const auto j = static_cast<std::size_t>(std::countr_zero(k));
      if ((set >> j) & 1) {
        for (std::size_t i = 0; i < n; ++i) constant[i] -= m(i, j);
      } else {
        for (std::size_t i = 0; i < n; ++i) constant[i] += m(i, j);
      }
    }

    // Multiply out prod_i (lin_i x + constant_i), degree grows by one per
    // linear factor.
    product[0] = 1;
    std::size_t deg = 0;
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      const bool linear = (set >> i) & 1;
      if (!linear) {
        if (sgn(constant[i]) == 0) {
          zero = true;
          break;
        }
        for (std::size_t d = 0; d <= deg; ++d) product[d] *= constant[i];
        continue;
      }
      const Integer& lin = m.row_scale[i];
      product[deg + 1] = product[deg] * lin;
      for (std::size_t d = deg; d > 0; --d) {
        tmp = product[d - 1] * lin;
        product[d] *= constant[i];
        product[d] += tmp;
      }
      product[0] *= constant[i];
      ++deg;
    }
    if (zero) continue;

    if (k & 1) {
      for (std::size_t d = 0; d <= deg; ++d) total[d] -= product[d];
    } else {
      for (std::size_t d = 0; d <= deg; ++d) total[d] += product[d];
    }
  }
  return total;
}

}  // namespace

Polynomial perm_poly(const Matrix& a, const PolyOptions& options) {
  if (!a.is_square()) throw InputError("perm_poly needs a square matrix");
  const std::size_t n = a.rows();
  if (n > kMaxPermanentDim) {
    throw ResourceError("perm_poly is capped at n = " + std::to_string(kMaxPermanentDim));
  }
  if (n == 0) return Polynomial({Rational(1)});

  // Row i of D(xI - A) is (d_i x e_i - d_i a_i), so the Ryser row sum over
  // a column set S is d_i [i in S] x - sum_{j in S} d_i a_ij.
  const IntegerRows m = clear_row_denominators(a);
  const std::uint64_t total = std::uint64_t{1} << n;

  std::vector<Integer> ascending;
  const unsigned threads = std::max(1u, options.threads);
  if (threads <= 1 || n < 10) {
    ascending = ryser_poly_partial(m, 0, total);
  } else {
    std::vector<std::vector<Integer>> partial(threads);
    std::vector<std::thread> workers;
    for (unsigned c = 0; c < threads; ++c) {
      const std::uint64_t lo = total * c / threads;
      const std::uint64_t hi = total * (c + 1) / threads;
      workers.emplace_back([&, c, lo, hi] { partial[c] = ryser_poly_partial(m, lo, hi); });
    }
    for (auto& w : workers) w.join();
    ascending.assign(n + 1, 0);
    for (const auto& p : partial)
      for (std::size_t d = 0; d <= n; ++d) ascending[d] += p[d];
  }

  // per(D(xI - A)) = (-1)^n * sum; divide by prod d_i.
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t d = 0; d <= n; ++d) {
    Rational c(n % 2 ? Integer(-ascending[d]) : ascending[d], m.scale);
    c.canonicalize();
    coeffs[n - d] = c;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial perm_poly_raw(const Matrix& a, const PolyOptions& options) {
  Polynomial p = perm_poly(a, options);
  return a.rows() % 2 ? p.negated() : p;
}

Polynomial perm_poly_principal_sums(const Matrix& a) {
  if (!a.is_square()) throw InputError("perm_poly_principal_sums needs a square matrix");
  const std::size_t n = a.rows();
  if (n > kPrincipalSumsCap) {
    throw ResourceError("perm_poly_principal_sums is capped at n = " +
                        std::to_string(kPrincipalSumsCap));
  }
  std::vector<Rational> coeffs(n + 1, 0);
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    const IndexSet s = IndexSet::from_mask(mask);
    coeffs[s.size()] += permanent_sub(a, s, s);
  }
  for (std::size_t i = 1; i <= n; i += 2) coeffs[i] = -coeffs[i];
  return Polynomial(std::move(coeffs));
}

std::size_t perm_nullity(const Matrix& a) { return perm_poly(a).zero_root_multiplicity(); }

}  // namespace permrank
