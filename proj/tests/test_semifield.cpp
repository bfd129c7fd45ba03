#include <doctest.h>

#include <cmath>
#include <random>

#include "tropelim/semifield.hpp"

using namespace tropelim;

namespace {

Value rv(const Semifield& sf, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!sf.is_plus() && sf.mode() == Mode::Float) {
        // Times carriers hold positive reals.
        return sf.finite_from_double(std::exp(q.get_d()));
    }
    return sf.finite(q);
}

bool close(const Semifield& sf, const Value& a, const Value& b, double rel = 1e-12) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    if (sf.exact()) return a == b;
    double x = a.as_double(), y = b.as_double();
    return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

} // namespace

TEST_CASE("parse and print semifield tags") {
    CHECK(parse_semifield_tag("max-plus") == SemifieldTag::MaxPlus);
    CHECK(parse_semifield_tag("min-times") == SemifieldTag::MinTimes);
    CHECK(to_string(SemifieldTag::MinPlus) == "min-plus");
    CHECK_THROWS_AS(parse_semifield_tag("max"), ValidationError);
}

TEST_CASE("exact mode rejects times semifields") {
    CHECK_THROWS_AS(Semifield(SemifieldTag::MaxTimes, Mode::Exact), DomainError);
    CHECK_THROWS_AS(Semifield(SemifieldTag::MinTimes, Mode::Exact), DomainError);
    CHECK_NOTHROW(Semifield(SemifieldTag::MaxTimes, Mode::Float));
}

TEST_CASE("max-plus basics") {
    Semifield sf(SemifieldTag::MaxPlus, Mode::Exact);
    Value a = sf.finite(Rational(3)), b = sf.finite(Rational(-2));
    CHECK(sf.oplus(a, b) == a);
    CHECK(sf.otimes(a, b) == sf.finite(Rational(1)));
    CHECK(sf.inv(a) == sf.finite(Rational(-3)));
    CHECK(sf.tpow(a, Rational(2, 3)) == sf.finite(Rational(2)));
    CHECK(sf.one() == sf.finite(Rational(0)));
    CHECK(sf.leq(b, a));
    CHECK_FALSE(sf.leq(a, b));
    CHECK(sf.oplus(sf.zero(), a) == a);
    CHECK(sf.otimes(sf.zero(), a).is_zero());
    CHECK_THROWS_AS(sf.inv(sf.zero()), DomainError);
}

TEST_CASE("min-plus order is reversed") {
    Semifield sf(SemifieldTag::MinPlus, Mode::Exact);
    Value a = sf.finite(Rational(3)), b = sf.finite(Rational(-2));
    CHECK(sf.oplus(a, b) == b);
    CHECK(sf.leq(a, b)); // 3 <= -2 in the induced order
    CHECK(sf.otimes(a, b) == sf.finite(Rational(1)));
}

TEST_CASE("times semifields in float mode") {
    Semifield sf(SemifieldTag::MaxTimes, Mode::Float);
    Value a = sf.finite_from_double(4.0), b = sf.finite_from_double(0.5);
    CHECK(sf.oplus(a, b).flt() == 4.0);
    CHECK(sf.otimes(a, b).flt() == 2.0);
    CHECK(sf.inv(a).flt() == 0.25);
    CHECK(sf.tpow(a, Rational(1, 2)).flt() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sf.one().flt() == 1.0);
}

TEST_CASE("semifield laws on random triples") {
    struct Instance {
        SemifieldTag tag;
        Mode mode;
    };
    const Instance instances[] = {
        {SemifieldTag::MaxPlus, Mode::Exact},  {SemifieldTag::MinPlus, Mode::Exact},
        {SemifieldTag::MaxPlus, Mode::Float},  {SemifieldTag::MinPlus, Mode::Float},
        {SemifieldTag::MaxTimes, Mode::Float}, {SemifieldTag::MinTimes, Mode::Float},
    };
    for (const auto& inst : instances) {
        Semifield sf(inst.tag, inst.mode);
        std::mt19937_64 rng(7);
        for (int t = 0; t < 200; ++t) {
            Value a = rv(sf, rng), b = rv(sf, rng), c = rv(sf, rng);
            CAPTURE(to_string(sf.tag()));
            // idempotency, commutativity, associativity
            CHECK(sf.oplus(a, a) == a);
            CHECK(sf.oplus(a, b) == sf.oplus(b, a));
            CHECK(close(sf, sf.oplus(sf.oplus(a, b), c), sf.oplus(a, sf.oplus(b, c))));
            // distributivity
            CHECK(close(sf, sf.otimes(a, sf.oplus(b, c)),
                        sf.oplus(sf.otimes(a, b), sf.otimes(a, c))));
            // majority law: a+b+c picks one of the operands
            Value s = sf.oplus(sf.oplus(a, b), c);
            CHECK((s == a || s == b || s == c));
            // monotonicity of otimes
            if (sf.leq(a, b)) CHECK(sf.leq(sf.otimes(a, c), sf.otimes(b, c)));
            // power laws
            CHECK(close(sf, sf.tpow(a, Rational(2)), sf.otimes(a, a)));
            CHECK(close(sf, sf.otimes(sf.tpow(a, Rational(1, 2)), sf.tpow(a, Rational(1, 2))), a));
            CHECK(close(sf, sf.tpow(a, Rational(-1)), sf.inv(a)));
        }
    }
}
