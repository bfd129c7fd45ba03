#pragma once

#include "tropelim/polynomial.hpp"

namespace tropelim {

// Interval of minimizers. A zero lower endpoint means the interval is open at
// the zero element (x itself is always nonzero).
struct Interval {
    Value lower;
    Value upper;
};

struct UnivariateResult {
    Value mu;
    Interval interval;
    bool attained = false;
};

// Closed-form solution of the one-variable problem: the minimum is the oplus
// of all pair terms a_i^(-p_k/(p_i-p_k)) a_k^(p_i/(p_i-p_k)) over exponent
// pairs p_i < 0 < p_k, plus one box term per monomial (h^p a for p < 0, a for
// p = 0, g^p a for p > 0; the case split keeps a zero g out of inversions).
// A zero minimum is reported as an unattained infimum.
UnivariateResult solve_univariate(const Problem& prob);

// Independent exact minimum for one-variable max-plus/min-plus problems with
// a finite box: evaluates the objective at both box endpoints and at every
// pairwise term intersection clipped into the box. Verification oracle only.
Value breakpoint_oracle(const Problem& prob);

} // namespace tropelim
