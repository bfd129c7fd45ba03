#include "tropelim/univariate.hpp"

namespace tropelim {

namespace {

// (h^-p oplus g^-p)^-1 a, via the case split that never inverts a zero g.
Value box_term(const Semifield& sf, const Value& a, const Rational& p, const Value& g,
               const Value& h) {
    int s = sign_of(p);
    if (s < 0) return sf.otimes(sf.tpow(h, p), a);
    if (s == 0) return a;
    if (g.is_zero()) return sf.zero();
    return sf.otimes(sf.tpow(g, p), a);
}

} // namespace

UnivariateResult solve_univariate(const Problem& prob) {
    const Polynomial& f = prob.polynomial;
    const Semifield& sf = f.semifield;
    if (f.arity != 1) throw DomainError("solve_univariate: arity must be 1");
    validate_problem(prob);

    const Value& g = prob.box.lower[0];
    const Value& h = prob.box.upper[0];

    Value mu = sf.zero();
    for (const auto& mi : f.monomials) {
        const Rational& pi = mi.exponents[0];
        if (sign_of(pi) < 0) {
            for (const auto& mk : f.monomials) {
                const Rational& pk = mk.exponents[0];
                if (sign_of(pk) <= 0) continue;
                Rational den = pi - pk;
                Value pair = sf.otimes(sf.tpow(mi.coeff, Rational(-pk / den)),
                                       sf.tpow(mk.coeff, Rational(pi / den)));
                mu = sf.oplus(mu, pair);
            }
        }
        mu = sf.oplus(mu, box_term(sf, mi.coeff, pi, g, h));
    }

    if (mu.is_zero()) {
        return UnivariateResult{sf.zero(), Interval{sf.zero(), h}, false};
    }

    Value lo = g;
    Value up_sum = sf.inv(h);
    for (const auto& m : f.monomials) {
        const Rational& p = m.exponents[0];
        int s = sign_of(p);
        if (s < 0) {
            Rational ip(1, 1);
            ip /= p;
            lo = sf.oplus(lo, sf.otimes(sf.tpow(mu, ip), sf.tpow(m.coeff, Rational(-ip))));
        } else if (s > 0) {
            Rational ip(1, 1);
            ip /= p;
            up_sum = sf.oplus(up_sum, sf.otimes(sf.tpow(mu, Rational(-ip)), sf.tpow(m.coeff, ip)));
        }
    }
    return UnivariateResult{mu, Interval{lo, sf.inv(up_sum)}, true};
}

Value breakpoint_oracle(const Problem& prob) {
    const Polynomial& f = prob.polynomial;
    const Semifield& sf = f.semifield;
    if (f.arity != 1) throw DomainError("breakpoint_oracle: arity must be 1");
    if (!sf.is_plus() || !sf.exact()) {
        throw DomainError("breakpoint_oracle: exact max-plus or min-plus only");
    }
    if (prob.box.lower[0].is_zero()) {
        throw DomainError("breakpoint_oracle: requires a compact box");
    }
    const Value& g = prob.box.lower[0];
    const Value& h = prob.box.upper[0];

    auto clip = [&](Value x) {
        if (!sf.leq(g, x)) return g;
        if (!sf.leq(x, h)) return h;
        return x;
    };

    std::vector<Value> candidates{g, h};
    const auto& ms = f.monomials;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t k = i + 1; k < ms.size(); ++k) {
            const Rational& pi = ms[i].exponents[0];
            const Rational& pk = ms[k].exponents[0];
            if (pi == pk) continue;
            // Intersection of the two affine pieces: (a_i (x) a_k^-1)^(1/(p_k-p_i)).
            Value ratio = sf.otimes(ms[i].coeff, sf.inv(ms[k].coeff));
            Rational inv_dp(1, 1);
            inv_dp /= (pk - pi);
            candidates.push_back(clip(sf.tpow(ratio, inv_dp)));
        }
    }

    Value best;
    bool first = true;
    for (const auto& x : candidates) {
        Value v = evaluate(f, std::span<const Value>(&x, 1));
        if (first || sf.leq(v, best)) {
            best = v;
            first = false;
        }
    }
    return best;
}

} // namespace tropelim
