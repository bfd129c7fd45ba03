#pragma once

#include <gmpxx.h>

#include <string>

namespace tropelim {

// Exact rational scalar, always kept canonical (lowest terms, positive
// denominator). GMP canonicalizes results of arithmetic on canonical operands.
using Rational = mpq_class;

// Parses "p/q", "p", or a plain decimal such as "-1.25" (converted exactly
// with a power-of-ten denominator). Throws ValidationError on malformed input.
Rational parse_rational(const std::string& text);

// Formats as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

} // namespace tropelim
