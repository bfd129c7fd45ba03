#include "tropelim/eliminate.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "tropelim/parallel.hpp"
#include "tropelim/prune.hpp"

namespace tropelim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// (h^-p oplus g^-p)^-1 a via the sign case split; zero when g is the zero
// element and p > 0.
Value box_coefficient(const Semifield& sf, const Value& a, const Rational& p, const Value& g,
                      const Value& h) {
    int s = sign_of(p);
    if (s < 0) return sf.otimes(sf.tpow(h, p), a);
    if (s == 0) return a;
    if (g.is_zero()) return sf.zero();
    return sf.otimes(sf.tpow(g, p), a);
}

Value evaluate_row(const Semifield& sf, const Monomial& row, std::span<const Value> prefix) {
    Value term = row.coeff;
    for (std::size_t j = 0; j < row.exponents.size(); ++j) {
        if (sign_of(row.exponents[j]) != 0) {
            term = sf.otimes(term, sf.tpow(prefix[j], row.exponents[j]));
        }
    }
    return term;
}

} // namespace

ObjectiveStage eliminate_step(const ObjectiveStage& stage, const Value& g, const Value& h,
                              bool merge, std::size_t max_monomials, int threads,
                              StageStats* stats) {
    const Semifield& sf = stage.semifield;
    if (stage.level < 1) throw DomainError("eliminate_step: nothing left to eliminate");
    if (h.is_zero()) throw DomainError("eliminate_step: upper bound is the zero element");
    if (!sf.leq(g, h)) throw DomainError("eliminate_step: lower bound exceeds upper bound");

    auto t0 = Clock::now();
    const std::size_t m = stage.rows.size();
    const std::size_t last = static_cast<std::size_t>(stage.level) - 1;

    std::vector<std::size_t> neg, pos;
    for (std::size_t i = 0; i < m; ++i) {
        int s = sign_of(stage.rows[i].exponents[last]);
        if (s < 0) neg.push_back(i);
        else if (s > 0) pos.push_back(i);
    }
    const std::size_t pair_count = neg.size() * pos.size();
    if (pair_count + m > max_monomials) {
        throw CapacityError("elimination step to level " + std::to_string(stage.level - 1) +
                            " needs " + std::to_string(pair_count + m) + " monomials (cap " +
                            std::to_string(max_monomials) + ")");
    }

    std::vector<Monomial> pair_rows(pair_count);
    parallel_for(pair_count, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const Monomial& ri = stage.rows[neg[idx / pos.size()]];
            const Monomial& rk = stage.rows[pos[idx % pos.size()]];
            const Rational& pin = ri.exponents[last];
            const Rational& pkn = rk.exponents[last];
            Rational den = pin - pkn; // < 0, never zero
            Monomial& out = pair_rows[idx];
            out.exponents.resize(last);
            for (std::size_t j = 0; j < last; ++j) {
                out.exponents[j] =
                    Rational(-(ri.exponents[j] * pkn - rk.exponents[j] * pin) / den);
            }
            out.coeff = sf.otimes(sf.tpow(ri.coeff, Rational(-pkn / den)),
                                  sf.tpow(rk.coeff, Rational(pin / den)));
        }
    });

    ObjectiveStage out{sf, stage.level - 1, std::move(pair_rows)};
    out.rows.reserve(pair_count + m);
    for (const auto& row : stage.rows) {
        Value coeff = box_coefficient(sf, row.coeff, row.exponents[last], g, h);
        if (coeff.is_zero()) continue; // zero-drop
        Monomial b;
        b.coeff = std::move(coeff);
        b.exponents.assign(row.exponents.begin(), row.exponents.begin() + last);
        out.rows.push_back(std::move(b));
    }

    if (stats) {
        stats->level = out.level;
        stats->input_count = m;
        stats->raw_count = m * m + m;
        stats->nonzero_count = out.rows.size();
    }
    if (merge) out = merge_duplicates(out, stats ? &stats->prune : nullptr);
    if (stats) {
        stats->after_count = out.rows.size();
        stats->elapsed_ms = ms_since(t0);
    }
    return out;
}

EliminationTrace backward_eliminate(const Problem& prob, const SolverOptions& options) {
    validate_problem(prob);
    Polynomial canon = canonicalize(prob.polynomial);
    const Semifield& sf = canon.semifield;
    const std::size_t arity = canon.arity;

    EliminationTrace trace;
    trace.semifield = sf;
    trace.objectives.push_back(
        ObjectiveStage{sf, static_cast<int>(arity), std::move(canon.monomials)});

    for (std::size_t n = arity; n >= 1; --n) {
        auto t0 = Clock::now();
        StageStats st;
        ObjectiveStage next =
            eliminate_step(trace.objectives.back(), prob.box.lower[n - 1], prob.box.upper[n - 1],
                           options.prune != PruneLevel::None, options.max_monomials,
                           options.threads, &st);
        if (options.prune == PruneLevel::Dominance && next.level >= 1) {
            next = dominance_prune(next, prob.box, &st.prune);
            st.after_count = next.rows.size();
        }
        st.elapsed_ms = ms_since(t0);
        trace.stats.push_back(st);
        trace.objectives.push_back(std::move(next));
    }

    Value mu = sf.zero();
    for (const auto& row : trace.objectives.back().rows) mu = sf.oplus(mu, row.coeff);
    trace.mu = mu;

    if (!mu.is_zero()) {
        // constraints[i] bounds x_{N-i}; built from the level-(N-i) stage.
        for (std::size_t n = arity; n >= 1; --n) {
            trace.constraints.push_back(build_constraints(trace.objectives[arity - n], mu));
        }
    }

    if (!options.keep_trace) {
        for (auto& stage : trace.objectives) {
            stage.rows.clear();
            stage.rows.shrink_to_fit();
        }
    }
    return trace;
}

ConstraintStage build_constraints(const ObjectiveStage& stage, const Value& mu) {
    const Semifield& sf = stage.semifield;
    if (mu.is_zero()) throw DomainError("infimum not attained; no certificate intervals");
    if (stage.level < 1) throw DomainError("build_constraints: level must be >= 1");
    const std::size_t last = static_cast<std::size_t>(stage.level) - 1;

    ConstraintStage cs;
    cs.level = stage.level;
    for (const auto& row : stage.rows) {
        const Rational& p = row.exponents[last];
        int s = sign_of(p);
        if (s == 0) continue;
        Rational ip(1, 1);
        ip /= p;
        Monomial m;
        m.exponents.resize(last);
        if (s < 0) {
            // c_i = mu^(1/p) a_i^(-1/p), r_ij = -p_ij/p
            m.coeff = sf.otimes(sf.tpow(mu, ip), sf.tpow(row.coeff, Rational(-ip)));
            for (std::size_t j = 0; j < last; ++j) m.exponents[j] = Rational(-row.exponents[j] / p);
            cs.lower_rows.push_back(std::move(m));
        } else {
            m.coeff = sf.otimes(sf.tpow(mu, Rational(-ip)), sf.tpow(row.coeff, ip));
            for (std::size_t j = 0; j < last; ++j) m.exponents[j] = Rational(row.exponents[j] / p);
            cs.upper_rows.push_back(std::move(m));
        }
    }
    return cs;
}

Solution forward_substitute(const EliminationTrace& trace, const Box& box, PickStrategy pick) {
    const Semifield& sf = trace.semifield;
    Solution sol;
    sol.mu = trace.mu;
    if (trace.mu.is_zero()) {
        sol.status = SolveStatus::InfimumNotAttained;
        return sol;
    }
    const std::size_t arity = box.size();
    if (trace.constraints.size() != arity) {
        throw DomainError("forward_substitute: trace does not match box arity");
    }

    for (std::size_t n = 1; n <= arity; ++n) {
        const ConstraintStage& cs = trace.constraints[arity - n];
        std::span<const Value> prefix(sol.point.data(), n - 1);

        Value lower = box.lower[n - 1];
        for (const auto& row : cs.lower_rows) {
            lower = sf.oplus(lower, evaluate_row(sf, row, prefix));
        }
        Value upper_acc = sf.inv(box.upper[n - 1]);
        for (const auto& row : cs.upper_rows) {
            upper_acc = sf.oplus(upper_acc, evaluate_row(sf, row, prefix));
        }
        Value upper = sf.inv(upper_acc);

        if (!sf.leq(lower, upper)) {
            throw std::logic_error("forward substitution: inconsistent interval for x_" +
                                   std::to_string(n));
        }

        Value x;
        switch (pick) {
            case PickStrategy::Lower:
                x = lower.is_zero() ? upper : lower;
                break;
            case PickStrategy::Upper:
                x = upper;
                break;
            case PickStrategy::Midpoint:
                // Tropical geometric mean; degenerates to the upper endpoint
                // when the interval is open at the zero element.
                x = lower.is_zero() ? upper : sf.tpow(sf.otimes(lower, upper), Rational(1, 2));
                break;
        }
        sol.intervals.push_back(Interval{lower, upper});
        sol.point.push_back(std::move(x));
    }
    sol.status = SolveStatus::Attained;
    return sol;
}

SolveResult solve(const Problem& prob, const SolverOptions& options) {
    EliminationTrace trace = backward_eliminate(prob, options);
    Solution sol = forward_substitute(trace, prob.box, options.pick);
    return SolveResult{std::move(sol), std::move(trace)};
}

Problem level1_problem(const EliminationTrace& trace, const Box& box) {
    for (const auto& stage : trace.objectives) {
        if (stage.level == 1 && !stage.rows.empty()) {
            Polynomial p{trace.semifield, 1, stage.rows};
            return Problem{std::move(p), Box{{box.lower[0]}, {box.upper[0]}}};
        }
    }
    throw DomainError("level1_problem: trace has no level-1 stage (was keep_trace set?)");
}

} // namespace tropelim
