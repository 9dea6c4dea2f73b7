#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tsnnc {

/// Exact rational number in canonical (reduced) form. Every time, rate and
/// bit count in the library is one of these.
using Rational = mpq_class;
using Integer = mpz_class;

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
Rational lcm(const Rational& a, const Rational& b);

inline const Rational& min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Parses "12", "-3", "793.6", "1e-5", "1.25E3" or "7/3" exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_exact_string(const Rational& q);

/// Decimal rendering. Terminating decimals are rendered exactly; all others
/// are rounded to `significant` significant digits.
std::string to_decimal(const Rational& q, int significant = 12);

}  // namespace tsnnc
