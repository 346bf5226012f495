#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace supercong {

using Integer = mpz_class;

// gmpxx arithmetic always returns canonical fractions (positive denominator,
// reduced); only construction from a raw numerator/denominator pair needs an
// explicit canonicalize(), which make_rational does.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a/b" (decimal). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// 2^e as an exact integer.
Integer pow2(unsigned long e);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, unsigned long e);

/// (-1)^e
inline int sign_pow(std::uint64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace supercong
