#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace centersvar {

/// Ground field for every exact path: arbitrary-precision rationals, always
/// kept in lowest terms with a positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or "num" (optional leading sign). Throws InvalidInput on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal fraction text: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Scales a nonzero rational vector to the primitive integer vector whose first
/// nonzero entry is positive. Returns an empty vector for the zero vector.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

/// Same normalization, returned as rationals.
std::vector<Rational> primitive_scaled(std::span<const Rational> values);

double to_double(const Rational& value);
long double to_long_double(const Rational& value);

}  // namespace centersvar
