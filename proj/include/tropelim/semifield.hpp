#pragma once

#include <string>
#include <variant>

#include "tropelim/errors.hpp"
#include "tropelim/rational.hpp"

namespace tropelim {

enum class SemifieldTag { MaxPlus, MinPlus, MaxTimes, MinTimes };
enum class Mode { Exact, Float };

SemifieldTag parse_semifield_tag(const std::string& name);
std::string to_string(SemifieldTag tag);

// An element of the semifield carrier: the zero element, a finite exact
// rational (exact mode), or a finite double (float mode). Values are
// immutable; the enclosing Semifield supplies the operations.
class Value {
public:
    Value() = default; // the zero element
    explicit Value(Rational q) : v_(std::move(q)) {}
    explicit Value(double f) : v_(f) {}

    static Value zero() { return Value{}; }

    bool is_zero() const { return std::holds_alternative<std::monostate>(v_); }
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_float() const { return std::holds_alternative<double>(v_); }

    const Rational& rat() const;
    double flt() const;

    // Finite value as a double regardless of mode; NaN is never produced.
    double as_double() const;

    // Structural equality: exact on rationals, bitwise on doubles.
    bool operator==(const Value& other) const;
    bool operator!=(const Value& other) const { return !(*this == other); }

private:
    std::variant<std::monostate, Rational, double> v_;
};

// Runtime descriptor of one of the four example semifields in one of the two
// arithmetic modes. Max-times and min-times are float-only: their carrier
// (positive reals) is not closed under rational powers over the rationals.
// Exact users can map them through the log isomorphism
// (max-times -> max-plus, min-times -> min-plus via x -> log x).
class Semifield {
public:
    Semifield(SemifieldTag tag, Mode mode);

    SemifieldTag tag() const { return tag_; }
    Mode mode() const { return mode_; }
    bool exact() const { return mode_ == Mode::Exact; }
    bool is_plus() const { return tag_ == SemifieldTag::MaxPlus || tag_ == SemifieldTag::MinPlus; }
    bool is_max() const { return tag_ == SemifieldTag::MaxPlus || tag_ == SemifieldTag::MaxTimes; }

    Value zero() const { return Value::zero(); }
    Value one() const;

    // Builds a finite value of this semifield from a rational, converting to
    // double in float mode.
    Value finite(const Rational& q) const;
    Value finite_from_double(double f) const;

    Value oplus(const Value& a, const Value& b) const;
    Value otimes(const Value& a, const Value& b) const;
    Value inv(const Value& a) const;
    Value tpow(const Value& a, const Rational& r) const;

    // x <= y in the order induced by idempotent addition: x oplus y == y.
    bool leq(const Value& a, const Value& b) const;
    bool lt(const Value& a, const Value& b) const { return leq(a, b) && !eq(a, b); }
    bool eq(const Value& a, const Value& b) const;

    bool operator==(const Semifield& other) const = default;

private:
    void check(const Value& a) const;
    // Natural carrier comparison of two finite values: -1, 0, +1.
    int natural_cmp(const Value& a, const Value& b) const;

    SemifieldTag tag_;
    Mode mode_;
};

} // namespace tropelim
