#include "tropelim/semifield.hpp"

#include <cmath>

namespace tropelim {

SemifieldTag parse_semifield_tag(const std::string& name) {
    if (name == "max-plus") return SemifieldTag::MaxPlus;
    if (name == "min-plus") return SemifieldTag::MinPlus;
    if (name == "max-times") return SemifieldTag::MaxTimes;
    if (name == "min-times") return SemifieldTag::MinTimes;
    throw ValidationError("unknown semifield '" + name + "'");
}

std::string to_string(SemifieldTag tag) {
    switch (tag) {
        case SemifieldTag::MaxPlus: return "max-plus";
        case SemifieldTag::MinPlus: return "min-plus";
        case SemifieldTag::MaxTimes: return "max-times";
        case SemifieldTag::MinTimes: return "min-times";
    }
    throw DomainError("invalid semifield tag");
}

const Rational& Value::rat() const {
    if (!is_rational()) throw DomainError("value is not a finite rational");
    return std::get<Rational>(v_);
}

double Value::flt() const {
    if (!is_float()) throw DomainError("value is not a finite float");
    return std::get<double>(v_);
}

double Value::as_double() const {
    if (is_rational()) return std::get<Rational>(v_).get_d();
    if (is_float()) return std::get<double>(v_);
    throw DomainError("zero element has no finite double representation");
}

bool Value::operator==(const Value& other) const {
    if (v_.index() != other.v_.index()) return false;
    if (is_zero()) return true;
    if (is_rational()) return std::get<Rational>(v_) == std::get<Rational>(other.v_);
    return std::get<double>(v_) == std::get<double>(other.v_);
}

Semifield::Semifield(SemifieldTag tag, Mode mode) : tag_(tag), mode_(mode) {
    if (mode == Mode::Exact && !is_plus()) {
        throw DomainError("semifield '" + tropelim::to_string(tag) +
                          "' is float-only; use the log isomorphism onto " +
                          (is_max() ? std::string("max-plus") : std::string("min-plus")) +
                          " for exact arithmetic");
    }
}

Value Semifield::one() const {
    Rational unit = is_plus() ? Rational(0) : Rational(1);
    return finite(unit);
}

Value Semifield::finite(const Rational& q) const {
    if (mode_ == Mode::Exact) return Value(q);
    return Value(q.get_d());
}

Value Semifield::finite_from_double(double f) const {
    if (mode_ == Mode::Float) return Value(f);
    // Exact conversion: doubles are dyadic rationals.
    return Value(Rational(f));
}

void Semifield::check(const Value& a) const {
    if (a.is_zero()) return;
    if (mode_ == Mode::Exact && !a.is_rational()) {
        throw DomainError("float value used with an exact-mode semifield");
    }
    if (mode_ == Mode::Float && !a.is_float()) {
        throw DomainError("rational value used with a float-mode semifield");
    }
}

int Semifield::natural_cmp(const Value& a, const Value& b) const {
    if (mode_ == Mode::Exact) return cmp(a.rat(), b.rat());
    double x = a.flt(), y = b.flt();
    return x < y ? -1 : (x > y ? 1 : 0);
}

Value Semifield::oplus(const Value& a, const Value& b) const {
    check(a);
    check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int c = natural_cmp(a, b);
    if (is_max()) return c >= 0 ? a : b;
    return c <= 0 ? a : b;
}

Value Semifield::otimes(const Value& a, const Value& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    if (is_plus()) {
        if (mode_ == Mode::Exact) return Value(Rational(a.rat() + b.rat()));
        return Value(a.flt() + b.flt());
    }
    return Value(a.flt() * b.flt());
}

Value Semifield::inv(const Value& a) const {
    check(a);
    if (a.is_zero()) throw DomainError("inverse of zero element");
    if (is_plus()) {
        if (mode_ == Mode::Exact) return Value(Rational(-a.rat()));
        return Value(-a.flt());
    }
    return Value(1.0 / a.flt());
}

Value Semifield::tpow(const Value& a, const Rational& r) const {
    check(a);
    if (a.is_zero()) {
        if (sign_of(r) > 0) return zero();
        throw DomainError("zero element to non-positive power");
    }
    if (sign_of(r) == 0) return one();
    if (is_plus()) {
        if (mode_ == Mode::Exact) return Value(Rational(r * a.rat()));
        return Value(r.get_d() * a.flt());
    }
    return Value(std::pow(a.flt(), r.get_d()));
}

bool Semifield::leq(const Value& a, const Value& b) const {
    check(a);
    check(b);
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    int c = natural_cmp(a, b);
    return is_max() ? c <= 0 : c >= 0;
}

bool Semifield::eq(const Value& a, const Value& b) const {
    check(a);
    check(b);
    return a == b;
}

} // namespace tropelim
