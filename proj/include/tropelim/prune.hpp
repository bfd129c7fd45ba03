#pragma once

#include "tropelim/eliminate.hpp"

namespace tropelim {

// Removes rows with a zero coefficient. Evaluation on the box is unchanged.
ObjectiveStage drop_zero(const ObjectiveStage& stage, PruneReport* report = nullptr);

// Merges rows with identical exponent vectors by oplus of their coefficients
// and sorts lexicographically (canonical stage order).
ObjectiveStage merge_duplicates(const ObjectiveStage& stage, PruneReport* report = nullptr);

// Pairwise dominance: drops row i when some surviving row k satisfies
// sup over the box of term_i (/) term_k <= 1, where the supremum is
// a_i a_k^-1 prod_j beta_j with beta_j = h_j^d for d = p_ij - p_kj >= 0 and
// g_j^d otherwise. Rows whose test would invert a zero bound are skipped,
// never pruned. The box spans the first stage.level variables.
ObjectiveStage dominance_prune(const ObjectiveStage& stage, const Box& box,
                               PruneReport* report = nullptr);

} // namespace tropelim
