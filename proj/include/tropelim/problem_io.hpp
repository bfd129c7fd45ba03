#pragma once

#include <string>

#include "tropelim/polynomial.hpp"

namespace tropelim {

// Problem document format:
// {
//   "semifield": "max-plus" | "min-plus" | "max-times" | "min-times",
//   "mode": "exact" | "float",
//   "monomials": [{"coeff": "<value>", "exponents": ["<rational>", ...]}, ...],
//   "box": {"lower": [...], "upper": [...]}
// }
// Rationals are "p/q" strings ("p" when q = 1); the zero element is the
// literal "zero" (also accepted: "-inf" for max-plus, "+inf" for min-plus and
// min-times). Arity is inferred from the exponent vectors.
Problem parse_problem(const std::string& text);
std::string serialize_problem(const Problem& prob);

// Value <-> string, using the conventions above.
std::string value_to_string(const Value& v, const Semifield& sf);
Value value_from_string(const std::string& s, const Semifield& sf);

} // namespace tropelim
