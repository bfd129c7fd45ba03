#include <doctest.h>

#include "tropelim/oracle.hpp"
#include "tropelim/polynomial.hpp"
#include "tropelim/problem_io.hpp"

using namespace tropelim;

namespace {

Monomial mono(const Semifield& sf, long c, std::vector<Rational> exps) {
    return Monomial{sf.finite(Rational(c)), std::move(exps)};
}

} // namespace

TEST_CASE("canonicalize drops zeros, merges, sorts") {
    Semifield sf(SemifieldTag::MaxPlus, Mode::Exact);
    Polynomial p{sf, 2, {}};
    p.monomials.push_back(mono(sf, 1, {Rational(1), Rational(0)}));
    p.monomials.push_back(Monomial{sf.zero(), {Rational(0), Rational(0)}});
    p.monomials.push_back(mono(sf, 3, {Rational(1), Rational(0)}));
    p.monomials.push_back(mono(sf, 2, {Rational(0), Rational(1)}));

    Polynomial c = canonicalize(p);
    REQUIRE(c.monomials.size() == 2);
    CHECK(c.monomials[0].exponents == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(c.monomials[1].coeff == sf.finite(Rational(3))); // 1 oplus 3 = 3
}

TEST_CASE("evaluate") {
    Semifield sf(SemifieldTag::MaxPlus, Mode::Exact);
    // f = 2 x1^(-1) x2 oplus 0 x1 ; at (1, -3): max(2-1-3, 0+1) = 1
    Polynomial p{sf, 2, {mono(sf, 2, {Rational(-1), Rational(1)}), mono(sf, 0, {Rational(1), Rational(0)})}};
    std::vector<Value> x{sf.finite(Rational(1)), sf.finite(Rational(-3))};
    CHECK(evaluate(p, x) == sf.finite(Rational(1)));

    Polynomial empty{sf, 2, {}};
    CHECK(evaluate(empty, x).is_zero());

    std::vector<Value> bad{sf.zero(), sf.finite(Rational(0))};
    CHECK_THROWS_AS(evaluate(p, bad), DomainError);
}

TEST_CASE("validate_problem reports field paths") {
    Semifield sf(SemifieldTag::MaxPlus, Mode::Exact);
    Problem prob{Polynomial{sf, 1, {mono(sf, 0, {Rational(1)})}},
                 Box{{sf.finite(Rational(2))}, {sf.finite(Rational(1))}}};
    CHECK_THROWS_WITH_AS(validate_problem(prob),
                         doctest::Contains("box.lower[0]"), ValidationError);

    prob.box.lower = {sf.zero()};
    CHECK_NOTHROW(validate_problem(prob));

    prob.box.upper = {sf.zero()};
    CHECK_THROWS_AS(validate_problem(prob), ValidationError);
}

TEST_CASE("problem json round trip") {
    const char* text = R"({
      "semifield": "max-plus",
      "mode": "exact",
      "monomials": [
        {"coeff": "2", "exponents": ["-3/2", "1"]},
        {"coeff": "-1/3", "exponents": ["1", "0"]}
      ],
      "box": {"lower": ["zero", "0"], "upper": ["1", "5/2"]}
    })";
    Problem prob = parse_problem(text);
    CHECK(prob.polynomial.arity == 2);
    CHECK(prob.polynomial.monomials[0].exponents[0] == Rational(-3, 2));
    CHECK(prob.box.lower[0].is_zero());

    Problem again = parse_problem(serialize_problem(prob));
    CHECK(again.polynomial.monomials.size() == prob.polynomial.monomials.size());
    CHECK(serialize_problem(again) == serialize_problem(prob));
}

TEST_CASE("json accepts -inf and numbers, rejects garbage") {
    const char* text = R"({
      "semifield": "max-plus",
      "mode": "exact",
      "monomials": [{"coeff": 2, "exponents": [1]}],
      "box": {"lower": ["-inf"], "upper": [1]}
    })";
    Problem prob = parse_problem(text);
    CHECK(prob.box.lower[0].is_zero());
    CHECK(prob.polynomial.monomials[0].coeff == prob.polynomial.semifield.finite(Rational(2)));

    CHECK_THROWS_AS(parse_problem("{"), ValidationError);
    CHECK_THROWS_AS(parse_problem(R"({"semifield": "max-plus", "mode": "exact"})"),
                    ValidationError);
}

TEST_CASE("round trip on random problems") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GeneratorParams params;
        params.arity = 1 + seed % 3;
        params.monomials = 1 + seed % 5;
        params.seed = seed;
        Problem prob = random_problem(params);
        Problem again = parse_problem(serialize_problem(prob));
        CHECK(serialize_problem(again) == serialize_problem(prob));
    }
}
