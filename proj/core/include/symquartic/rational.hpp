#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symquartic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal string such as "-2.09" or "1e-6".
/// Decimal input is converted exactly ("2.09" is 209/100). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// toward zero. Exact, no floating point involved.
std::string to_decimal(const Rational& value, int digits);

double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Rational abs(const Rational& value);
Integer floor(const Rational& value);
Rational pow(const Rational& base, unsigned exponent);

/// Rational with the smallest denominator (then smallest magnitude numerator)
/// in the open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Best continued-fraction convergent of `x` with denominator at most
/// `max_denominator`.
Rational rationalize(double x, const Integer& max_denominator);

/// 10^-digits as an exact rational.
Rational decimal_epsilon(int digits);

}  // namespace symquartic
