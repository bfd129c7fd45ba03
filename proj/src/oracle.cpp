#include "tropelim/oracle.hpp"

#include <random>
#include <string>

#include "tropelim/univariate.hpp"

namespace tropelim {

bool solve_linear_fraction_free(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs,
                                std::vector<Rational>& out) {
    const std::size_t n = a.size();
    // Clear denominators row by row to get an integer augmented matrix.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a[i][j].get_den_mpz_t());
        }
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rhs[i].get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = a[i][j].get_num() * (scale / a[i][j].get_den());
        }
        m[i][n] = rhs[i].get_num() * (scale / rhs[i].get_den());
    }

    // Bareiss: every division below is exact.
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    out.assign(n, Rational(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * out[j];
        out[ii] = Rational(acc / Rational(m[ii][ii]));
    }
    return true;
}

Value grid_oracle(const Problem& prob, int resolution, std::size_t max_points) {
    const Polynomial& f = prob.polynomial;
    const Semifield& sf = f.semifield;
    if (!sf.exact()) throw DomainError("grid_oracle: exact mode only");
    if (resolution < 2) throw DomainError("grid_oracle: resolution must be >= 2");
    const std::size_t n = f.arity;
    for (std::size_t j = 0; j < n; ++j) {
        if (prob.box.lower[j].is_zero()) throw DomainError("grid_oracle: requires a finite box");
    }

    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (total > max_points / static_cast<std::size_t>(resolution)) {
            throw CapacityError("grid_oracle: lattice of " + std::to_string(resolution) + "^" +
                                std::to_string(n) + " points exceeds cap");
        }
        total *= static_cast<std::size_t>(resolution);
    }

    // Per-axis rational steps in carrier arithmetic: x_j(t) = g_j (x) step_j^t.
    std::vector<Value> steps(n);
    for (std::size_t j = 0; j < n; ++j) {
        Value span = sf.otimes(prob.box.upper[j], sf.inv(prob.box.lower[j]));
        steps[j] = sf.tpow(span, Rational(1, resolution - 1));
    }

    std::vector<int> idx(n, 0);
    std::vector<Value> point(n);
    Value best;
    bool first = true;
    for (std::size_t count = 0; count < total; ++count) {
        for (std::size_t j = 0; j < n; ++j) {
            point[j] = idx[j] == 0 ? prob.box.lower[j]
                                   : sf.otimes(prob.box.lower[j], sf.tpow(steps[j], Rational(idx[j])));
            // Land exactly on the upper bound at the last index.
            if (idx[j] == resolution - 1) point[j] = prob.box.upper[j];
        }
        Value v = evaluate(f, point);
        if (first || sf.leq(v, best)) {
            best = v;
            first = false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (++idx[j] < resolution) break;
            idx[j] = 0;
        }
    }
    return best;
}

Value vertex_oracle(const Problem& prob, const VertexOracleCaps& caps) {
    const Polynomial& f = prob.polynomial;
    const Semifield& sf = f.semifield;
    if (!sf.exact() || !sf.is_plus()) {
        throw DomainError("vertex_oracle: exact max-plus or min-plus only");
    }
    const std::size_t n = f.arity;
    const std::size_t m = f.monomials.size();
    if (n > caps.max_arity || m > caps.max_monomials) {
        throw CapacityError("vertex_oracle: instance exceeds caps (N <= " +
                            std::to_string(caps.max_arity) + ", M <= " +
                            std::to_string(caps.max_monomials) + ")");
    }
    std::vector<Rational> g(n), h(n), num_lo(n), num_hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (prob.box.lower[j].is_zero()) throw DomainError("vertex_oracle: requires a finite box");
        g[j] = prob.box.lower[j].rat();
        h[j] = prob.box.upper[j].rat();
        // Numeric bounds; in min-plus the induced order is reversed.
        num_lo[j] = g[j] < h[j] ? g[j] : h[j];
        num_hi[j] = g[j] < h[j] ? h[j] : g[j];
    }

    // Candidate hyperplanes: term_i = term_k equalities and box facets.
    struct Equation {
        std::vector<Rational> coeffs;
        Rational rhs;
    };
    std::vector<Equation> eqs;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = i + 1; k < m; ++k) {
            Equation e;
            e.coeffs.resize(n);
            for (std::size_t j = 0; j < n; ++j) {
                e.coeffs[j] = f.monomials[i].exponents[j] - f.monomials[k].exponents[j];
            }
            e.rhs = f.monomials[k].coeff.rat() - f.monomials[i].coeff.rat();
            eqs.push_back(std::move(e));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (const Rational* bound : {&g[j], &h[j]}) {
            Equation e;
            e.coeffs.assign(n, Rational(0));
            e.coeffs[j] = 1;
            e.rhs = *bound;
            eqs.push_back(std::move(e));
        }
    }

    Value best;
    bool first = true;
    std::vector<Value> point(n);
    auto consider = [&](const std::vector<Rational>& x) {
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] < num_lo[j] || x[j] > num_hi[j]) return;
            point[j] = Value(x[j]);
        }
        Value v = evaluate(f, point);
        if (first || sf.leq(v, best)) {
            best = v;
            first = false;
        }
    };

    std::vector<std::size_t> chosen(n);
    std::vector<Rational> x;
    auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
        if (depth == n) {
            std::vector<std::vector<Rational>> a(n);
            std::vector<Rational> rhs(n);
            for (std::size_t r = 0; r < n; ++r) {
                a[r] = eqs[chosen[r]].coeffs;
                rhs[r] = eqs[chosen[r]].rhs;
            }
            if (solve_linear_fraction_free(std::move(a), std::move(rhs), x)) consider(x);
            return;
        }
        for (std::size_t e = start; e + (n - depth) <= eqs.size(); ++e) {
            chosen[depth] = e;
            self(self, depth + 1, e + 1);
        }
    };
    recurse(recurse, 0, 0);

    // All box corners, explicitly.
    std::vector<Rational> corner(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t j = 0; j < n; ++j) corner[j] = (mask >> j) & 1 ? h[j] : g[j];
        consider(corner);
    }
    return best;
}

Problem random_problem(const GeneratorParams& params) {
    if (params.arity < 1 || params.monomials < 1) {
        throw DomainError("random_problem: arity and monomial count must be >= 1");
    }
    Semifield sf(params.tag, params.mode);
    std::mt19937_64 rng(params.seed);

    auto draw = [&rng](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    auto draw_rational = [&](long num_range, long max_den) {
        long num = draw(-num_range, num_range);
        long den = draw(1, max_den);
        Rational q(num, den);
        q.canonicalize();
        return q;
    };

    Polynomial poly{sf, params.arity, {}};
    for (std::size_t i = 0; i < params.monomials; ++i) {
        Monomial m;
        m.coeff = sf.finite(draw_rational(params.coeff_numerator_range, params.coeff_max_denominator));
        m.exponents.reserve(params.arity);
        for (std::size_t j = 0; j < params.arity; ++j) {
            m.exponents.push_back(
                draw_rational(params.exponent_numerator_range, params.exponent_max_denominator));
        }
        poly.monomials.push_back(std::move(m));
    }

    Box box;
    for (std::size_t j = 0; j < params.arity; ++j) {
        long den = draw(1, params.box_max_denominator);
        Rational lo(draw(-params.box_numerator_range, params.box_numerator_range), den);
        Rational width(draw(1, params.box_max_width_numerator), den);
        width.canonicalize();
        lo.canonicalize();
        Rational hi = lo + width;
        if (!sf.is_max()) std::swap(lo, hi); // induced order is reversed
        box.lower.push_back(sf.finite(lo));
        box.upper.push_back(sf.finite(hi));
    }

    Problem prob{canonicalize(poly), std::move(box)};
    validate_problem(prob);
    return prob;
}

} // namespace tropelim
