#pragma once

#include <cstddef>
#include <vector>

#include "tropelim/polynomial.hpp"
#include "tropelim/univariate.hpp"

namespace tropelim {

enum class PickStrategy { Lower, Midpoint, Upper };
enum class PruneLevel { None, Basic, Dominance };

struct SolverOptions {
    PruneLevel prune = PruneLevel::Dominance;
    PickStrategy pick = PickStrategy::Lower;
    std::size_t max_monomials = 5'000'000;
    bool keep_trace = false; // retain full objective stage rows in the trace
    int threads = 0;         // 0 = all hardware threads
};

// The objective polynomial in variables x_1..x_level, partway through
// backward elimination. Rows are monomials with `level` exponents each.
struct ObjectiveStage {
    Semifield semifield;
    int level = 0;
    std::vector<Monomial> rows;
};

struct PruneReport {
    std::size_t dropped_zero = 0;
    std::size_t merged = 0;
    std::size_t dominated = 0;
    std::size_t before = 0;
    std::size_t after = 0;
};

// Lower/upper bound polynomials for x_level in the variables x_1..x_{level-1}.
// Rows with zero coefficient are omitted.
struct ConstraintStage {
    int level = 0;
    std::vector<Monomial> lower_rows; // coefficients c_i, exponents r_ij
    std::vector<Monomial> upper_rows; // coefficients d_i, exponents s_ij
};

struct StageStats {
    int level = 0;               // level of the produced stage (n-1)
    std::size_t input_count = 0; // M_n
    std::size_t raw_count = 0;   // M_n^2 + M_n, before zero-drop
    std::size_t nonzero_count = 0; // after zero-drop, before merge/dominance
    std::size_t after_count = 0;   // rows actually kept
    PruneReport prune;
    double elapsed_ms = 0.0;
};

struct EliminationTrace {
    Semifield semifield{SemifieldTag::MaxPlus, Mode::Exact};
    std::vector<ObjectiveStage> objectives;   // levels N..0
    std::vector<ConstraintStage> constraints; // levels N..1
    Value mu;
    std::vector<StageStats> stats; // one entry per elimination step
};

enum class SolveStatus { Attained, InfimumNotAttained };

struct Solution {
    Value mu;
    std::vector<Value> point;
    std::vector<Interval> intervals; // numeric bounds realized at the chosen prefix
    SolveStatus status = SolveStatus::InfimumNotAttained;
};

// One variable elimination step: rewrites the stage at level n as an
// equivalent stage at level n-1. For every exponent pair p_in < 0 < p_kn a
// pair monomial is emitted with exponents
//   q_j = -(p_ij p_kn - p_kj p_in) / (p_in - p_kn)
// and coefficient a_i^(-p_kn/(p_in-p_kn)) a_k^(p_in/(p_in-p_kn)); every row
// additionally yields a box monomial with the leading exponent dropped and
// coefficient (h^-p oplus g^-p)^-1 a, computed by the sign case split so a
// zero g never gets inverted (its box monomial is zero and is dropped).
// Zero rows are never materialized; duplicates are merged when merge is set.
ObjectiveStage eliminate_step(const ObjectiveStage& stage, const Value& g, const Value& h,
                              bool merge = true, std::size_t max_monomials = 5'000'000,
                              int threads = 0, StageStats* stats = nullptr);

// Backward elimination of x_N..x_1 followed by construction of the per-level
// constraint stages. mu is the oplus of the level-0 coefficients.
EliminationTrace backward_eliminate(const Problem& prob, const SolverOptions& options = {});

// Builds the x_level bound polynomials from an objective stage and the global
// minimum: c_i = mu^(1/p) a_i^(-1/p), r_ij = -p_ij/p for p = p_i,level < 0 and
// d_i = mu^(-1/p) a_i^(1/p), s_ij = p_ij/p for p > 0. Requires mu nonzero.
ConstraintStage build_constraints(const ObjectiveStage& stage, const Value& mu);

// Evaluates the stored bounds at the already-chosen prefix, picks each x_n
// per the strategy, and returns the realized intervals with the point.
Solution forward_substitute(const EliminationTrace& trace, const Box& box, PickStrategy pick);

struct SolveResult {
    Solution solution;
    EliminationTrace trace;
};

// Backward elimination then forward substitution (the full procedure).
SolveResult solve(const Problem& prob, const SolverOptions& options = {});

// Views the level-1 objective stage of a trace as a one-variable Problem
// with box [g_1, h_1]; used to cross-check against the closed form.
Problem level1_problem(const EliminationTrace& trace, const Box& box);

} // namespace tropelim
