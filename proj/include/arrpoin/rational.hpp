#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrpoin {

// Exact scalars. mpq_class keeps values in lowest terms with a positive
// denominator once canonicalized; every constructor below canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Parses "n" or "n/d" with optional leading sign. Throws std::invalid_argument
// on anything else (including decimals and a zero denominator).
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

} // namespace arrpoin
