#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permrank/matrix.hpp"

namespace permrank {

/// Dense polynomial with exact coefficients, stored leading-first:
/// coefficients()[i] multiplies x^(degree_bound - i). Leading zeros are kept
/// so an n x n input always yields n + 1 coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> leading_first) : coeffs_(std::move(leading_first)) {}

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  /// Nominal degree, i.e. size() - 1.
  std::size_t degree_bound() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// b_i, the coefficient of x^(degree_bound - i).
  const Rational& b(std::size_t i) const { return coeffs_.at(i); }

  Rational evaluate(const Rational& x) const;
  /// Multiplicity of 0 as a root: number of trailing zero coefficients.
  std::size_t zero_root_multiplicity() const;
  /// Multiplies every coefficient by -1 (used for the raw sign convention).
  Polynomial negated() const;

  /// "x^4 + 5x^2", "x^3 + 3x - 2", "0".
  std::string to_string(char var = 'x') const;
  /// "[1, 0, 5, 0, 0]"
  std::string coefficient_list() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

struct PolyOptions {
  unsigned threads = 1;
};

/// Monic permanental polynomial per(xI - A) = (-1)^n per(A - xI), via
/// Ryser inclusion-exclusion with degree-one polynomial entries.
/// Throws InputError for non-square input, ResourceError for n > 30.
Polynomial perm_poly(const Matrix& a, const PolyOptions& options = {});

/// per(A - xI), the leading coefficient is (-1)^n.
Polynomial perm_poly_raw(const Matrix& a, const PolyOptions& options = {});

inline constexpr std::size_t kPrincipalSumsCap = 14;

/// The same polynomial assembled from principal minors:
/// b_i = (-1)^i * sum_{|S| = i} per(A[S, S]). Oracle grade, n <= 14.
Polynomial perm_poly_principal_sums(const Matrix& a);

/// Multiplicity of 0 as a root of the permanental polynomial.
std::size_t perm_nullity(const Matrix& a);

}  // namespace permrank
