#pragma once

#include <cstdint>

#include "tropelim/polynomial.hpp"

namespace tropelim {

// Exact solve of a square rational linear system by fraction-free (Bareiss)
// elimination after clearing denominators. Returns false when singular.
bool solve_linear_fraction_free(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs,
                                std::vector<Rational>& out);

// Evaluates the objective on the inclusive rational lattice spanning the box
// (resolution points per axis) and returns the least value in the induced
// order. An upper bound on the true minimum. Exact mode, finite box only.
Value grid_oracle(const Problem& prob, int resolution, std::size_t max_points = 20'000'000);

struct VertexOracleCaps {
    std::size_t max_arity = 3;
    std::size_t max_monomials = 8;
};

// Exact brute-force minimum for small exact max-plus/min-plus problems with a
// finite box. Enumerates every choice of N equations from the pairwise term
// equalities and the box facets, solves each system exactly, and evaluates
// the objective at the in-box solutions plus all box corners.
Value vertex_oracle(const Problem& prob, const VertexOracleCaps& caps = {});

struct GeneratorParams {
    std::size_t arity = 1;
    std::size_t monomials = 3;
    long coeff_numerator_range = 8;    // numerators drawn from [-r, r]
    long coeff_max_denominator = 3;    // denominators from [1, d]
    long exponent_numerator_range = 3;
    long exponent_max_denominator = 2;
    long box_numerator_range = 4;
    long box_max_width_numerator = 8; // widths from [1, w]
    long box_max_denominator = 2;
    std::uint64_t seed = 0;
    SemifieldTag tag = SemifieldTag::MaxPlus;
    Mode mode = Mode::Exact;
};

// Deterministic per seed; the result always satisfies the Problem invariants
// and has a finite box.
Problem random_problem(const GeneratorParams& params);

} // namespace tropelim
