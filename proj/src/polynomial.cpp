#include "tropelim/polynomial.hpp"

#include <algorithm>
#include <string>

namespace tropelim {

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t j = 0; j < a.size() && j < b.size(); ++j) {
        int c = cmp(a[j], b[j]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

Polynomial canonicalize(const Polynomial& p) {
    Polynomial out{p.semifield, p.arity, {}};
    out.monomials.reserve(p.monomials.size());
    for (const auto& m : p.monomials) {
        if (!m.coeff.is_zero()) out.monomials.push_back(m);
    }
    std::sort(out.monomials.begin(), out.monomials.end(),
              [](const Monomial& a, const Monomial& b) { return lex_less(a.exponents, b.exponents); });
    std::size_t w = 0;
    for (std::size_t r = 0; r < out.monomials.size(); ++r) {
        if (w > 0 && out.monomials[w - 1].exponents == out.monomials[r].exponents) {
            out.monomials[w - 1].coeff =
                p.semifield.oplus(out.monomials[w - 1].coeff, out.monomials[r].coeff);
        } else {
            if (w != r) out.monomials[w] = std::move(out.monomials[r]);
            ++w;
        }
    }
    out.monomials.resize(w);
    return out;
}

Value evaluate(const Polynomial& p, std::span<const Value> x) {
    if (x.size() != p.arity) throw DomainError("evaluation point arity mismatch");
    for (const auto& xj : x) {
        if (xj.is_zero()) throw DomainError("evaluation at the zero element");
    }
    const Semifield& sf = p.semifield;
    Value acc = sf.zero();
    for (const auto& m : p.monomials) {
        Value term = m.coeff;
        for (std::size_t j = 0; j < p.arity; ++j) {
            if (sign_of(m.exponents[j]) != 0) term = sf.otimes(term, sf.tpow(x[j], m.exponents[j]));
        }
        acc = sf.oplus(acc, term);
    }
    return acc;
}

void validate_problem(const Problem& prob) {
    const auto& poly = prob.polynomial;
    const auto& box = prob.box;
    const Semifield& sf = poly.semifield;
    if (poly.arity == 0) throw ValidationError("polynomial: arity must be >= 1");
    for (std::size_t i = 0; i < poly.monomials.size(); ++i) {
        const auto& m = poly.monomials[i];
        if (m.coeff.is_zero()) {
            throw ValidationError("monomials[" + std::to_string(i) + "].coeff: must be nonzero");
        }
        if (m.exponents.size() != poly.arity) {
            throw ValidationError("monomials[" + std::to_string(i) +
                                  "].exponents: length mismatch with arity");
        }
    }
    if (box.lower.size() != poly.arity || box.upper.size() != poly.arity) {
        throw ValidationError("box: length mismatch with arity");
    }
    for (std::size_t j = 0; j < poly.arity; ++j) {
        if (box.upper[j].is_zero()) {
            throw ValidationError("box.upper[" + std::to_string(j) + "]: must be nonzero");
        }
        if (!sf.leq(box.lower[j], box.upper[j])) {
            throw ValidationError("box.lower[" + std::to_string(j) + "]: exceeds upper bound");
        }
    }
}

bool inside_box(const Semifield& sf, const Box& box, std::span<const Value> x) {
    if (x.size() != box.size()) return false;
    for (std::size_t j = 0; j < box.size(); ++j) {
        if (x[j].is_zero()) return false;
        if (!sf.leq(box.lower[j], x[j]) || !sf.leq(x[j], box.upper[j])) return false;
    }
    return true;
}

} // namespace tropelim
