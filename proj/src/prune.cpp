#include "tropelim/prune.hpp"

#include <algorithm>

namespace tropelim {

ObjectiveStage drop_zero(const ObjectiveStage& stage, PruneReport* report) {
    ObjectiveStage out{stage.semifield, stage.level, {}};
    out.rows.reserve(stage.rows.size());
    for (const auto& row : stage.rows) {
        if (!row.coeff.is_zero()) out.rows.push_back(row);
    }
    if (report) {
        report->before = stage.rows.size();
        report->dropped_zero += stage.rows.size() - out.rows.size();
        report->after = out.rows.size();
    }
    return out;
}

ObjectiveStage merge_duplicates(const ObjectiveStage& stage, PruneReport* report) {
    Polynomial p{stage.semifield, static_cast<std::size_t>(stage.level), stage.rows};
    Polynomial c = canonicalize(p);
    ObjectiveStage out{stage.semifield, stage.level, std::move(c.monomials)};
    if (report) {
        report->before = stage.rows.size();
        report->merged += stage.rows.size() - out.rows.size();
        report->after = out.rows.size();
    }
    return out;
}

ObjectiveStage dominance_prune(const ObjectiveStage& stage, const Box& box, PruneReport* report) {
    const Semifield& sf = stage.semifield;
    const std::size_t n = stage.rows.size();
    const std::size_t dims = static_cast<std::size_t>(stage.level);
    std::vector<bool> removed(n, false);

    // sup over the box of term_i / term_k, or zero() sentinel when the bound
    // would need inv of a zero lower bound.
    auto dominates = [&](std::size_t i, std::size_t k) {
        Value s = sf.otimes(stage.rows[i].coeff, sf.inv(stage.rows[k].coeff));
        for (std::size_t j = 0; j < dims; ++j) {
            Rational d = stage.rows[i].exponents[j] - stage.rows[k].exponents[j];
            int sd = sign_of(d);
            if (sd == 0) continue;
            const Value& bound = sd > 0 ? box.upper[j] : box.lower[j];
            if (bound.is_zero()) return false; // cannot bound; skip, never prune
            s = sf.otimes(s, sf.tpow(bound, d));
        }
        return sf.leq(s, sf.one());
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || removed[k]) continue;
            if (dominates(i, k)) {
                removed[i] = true;
                break;
            }
        }
    }

    ObjectiveStage out{sf, stage.level, {}};
    for (std::size_t i = 0; i < n; ++i) {
        if (!removed[i]) out.rows.push_back(stage.rows[i]);
    }
    if (report) {
        report->before = n;
        report->dominated += n - out.rows.size();
        report->after = out.rows.size();
    }
    return out;
}

} // namespace tropelim
