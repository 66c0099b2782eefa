#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace permrank {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Throws InputError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise. Never scientific notation.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace permrank
