#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropelim/semifield.hpp"

namespace tropelim {

// One tropical Puiseux monomial: coefficient otimes a product of rational
// powers of the variables.
struct Monomial {
    Value coeff;
    std::vector<Rational> exponents;
};

// Strict lexicographic order on exponent vectors of equal length.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Finite oplus-sum of monomials of fixed arity. Canonical form has no zero
// coefficients and pairwise distinct, lexicographically sorted exponent
// vectors; the empty polynomial is a valid canonical form.
struct Polynomial {
    Semifield semifield;
    std::size_t arity = 0;
    std::vector<Monomial> monomials;
};

// Drops zero-coefficient monomials, merges equal exponent vectors with oplus,
// and sorts lexicographically. Evaluation is unchanged at every point.
Polynomial canonicalize(const Polynomial& p);

// oplus over monomials of coeff otimes prod_j x_j^(p_ij). The empty
// polynomial evaluates to the zero element. Every x_j must be nonzero.
Value evaluate(const Polynomial& p, std::span<const Value> x);

// Per-variable bounds g_j <= x_j <= h_j; g_j may be the zero element
// (unbounded below, x_j still nonzero), h_j never is.
struct Box {
    std::vector<Value> lower;
    std::vector<Value> upper;

    std::size_t size() const { return lower.size(); }
};

struct Problem {
    Polynomial polynomial;
    Box box;
};

// Checks all Problem invariants (arity agreement, a_i != 0, h_j != 0,
// g_j <= h_j). Throws ValidationError with a field path.
void validate_problem(const Problem& prob);

// True iff x lies inside the box (strictly above a zero lower bound).
bool inside_box(const Semifield& sf, const Box& box, std::span<const Value> x);

} // namespace tropelim
