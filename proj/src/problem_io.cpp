#include "tropelim/problem_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace tropelim {

namespace {

using nlohmann::ordered_json;

std::string zero_literal(const Semifield& sf) {
    switch (sf.tag()) {
        case SemifieldTag::MaxPlus: return "-inf";
        case SemifieldTag::MinPlus:
        case SemifieldTag::MinTimes: return "+inf";
        case SemifieldTag::MaxTimes: return "zero";
    }
    return "zero";
}

std::string format_double(double f) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", f);
    return buf;
}

Value parse_value_json(const ordered_json& j, const Semifield& sf, const std::string& path) {
    if (j.is_number()) {
        if (sf.mode() == Mode::Float) return Value(j.get<double>());
        if (j.is_number_integer()) return Value(Rational(static_cast<long>(j.get<long long>())));
        // Doubles are dyadic rationals, so this stays exact.
        return Value(Rational(j.get<double>()));
    }
    if (!j.is_string()) throw ValidationError(path + ": expected a string or number");
    const std::string s = j.get<std::string>();
    try {
        return value_from_string(s, sf);
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::vector<Value> parse_value_array(const ordered_json& j, const Semifield& sf,
                                     const std::string& path) {
    if (!j.is_array()) throw ValidationError(path + ": expected an array");
    std::vector<Value> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_value_json(j[i], sf, path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

} // namespace

std::string value_to_string(const Value& v, const Semifield& sf) {
    if (v.is_zero()) return zero_literal(sf);
    if (v.is_rational()) return to_string(v.rat());
    return format_double(v.flt());
}

Value value_from_string(const std::string& s, const Semifield& sf) {
    if (s == "zero" || s == zero_literal(sf)) return Value::zero();
    if (s == "-inf" || s == "+inf" || s == "inf") {
        throw ValidationError("'" + s + "' is not the zero literal of " + to_string(sf.tag()));
    }
    Rational q = parse_rational(s);
    return sf.finite(q);
}

Problem parse_problem(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("document: expected an object");
    if (!doc.contains("semifield")) throw ValidationError("semifield: missing");
    if (!doc["semifield"].is_string()) throw ValidationError("semifield: expected a string");
    SemifieldTag tag = parse_semifield_tag(doc["semifield"].get<std::string>());

    Mode mode = Mode::Exact;
    if (doc.contains("mode")) {
        const std::string m = doc["mode"].get<std::string>();
        if (m == "exact") mode = Mode::Exact;
        else if (m == "float") mode = Mode::Float;
        else throw ValidationError("mode: expected 'exact' or 'float'");
    }
    Semifield sf = [&] {
        try {
            return Semifield(tag, mode);
        } catch (const DomainError& e) {
            throw ValidationError(std::string("semifield: ") + e.what());
        }
    }();

    if (!doc.contains("monomials") || !doc["monomials"].is_array() || doc["monomials"].empty()) {
        throw ValidationError("monomials: expected a non-empty array");
    }
    Polynomial poly{sf, 0, {}};
    const auto& ms = doc["monomials"];
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const std::string path = "monomials[" + std::to_string(i) + "]";
        if (!ms[i].is_object() || !ms[i].contains("coeff") || !ms[i].contains("exponents")) {
            throw ValidationError(path + ": expected {coeff, exponents}");
        }
        Monomial m;
        m.coeff = parse_value_json(ms[i]["coeff"], sf, path + ".coeff");
        if (m.coeff.is_zero()) throw ValidationError(path + ".coeff: must be nonzero");
        const auto& exps = ms[i]["exponents"];
        if (!exps.is_array() || exps.empty()) {
            throw ValidationError(path + ".exponents: expected a non-empty array");
        }
        for (std::size_t j = 0; j < exps.size(); ++j) {
            const std::string epath = path + ".exponents[" + std::to_string(j) + "]";
            const auto& e = exps[j];
            try {
                if (e.is_number_integer()) {
                    m.exponents.emplace_back(static_cast<long>(e.get<long long>()));
                } else if (e.is_string()) {
                    m.exponents.push_back(parse_rational(e.get<std::string>()));
                } else {
                    throw ValidationError("expected a rational string or integer");
                }
            } catch (const ValidationError& err) {
                throw ValidationError(epath + ": " + err.what());
            }
        }
        if (poly.arity == 0) poly.arity = m.exponents.size();
        if (m.exponents.size() != poly.arity) {
            throw ValidationError(path + ".exponents: length mismatch with arity");
        }
        poly.monomials.push_back(std::move(m));
    }

    if (!doc.contains("box") || !doc["box"].is_object()) throw ValidationError("box: missing");
    Box box;
    box.lower = parse_value_array(doc["box"]["lower"], sf, "box.lower");
    box.upper = parse_value_array(doc["box"]["upper"], sf, "box.upper");

    Problem prob{canonicalize(poly), box};
    if (prob.polynomial.monomials.empty()) {
        throw ValidationError("monomials: all monomials merged to zero");
    }
    validate_problem(prob);
    return prob;
}

std::string serialize_problem(const Problem& prob) {
    const Semifield& sf = prob.polynomial.semifield;
    ordered_json doc;
    doc["semifield"] = to_string(sf.tag());
    doc["mode"] = sf.mode() == Mode::Exact ? "exact" : "float";
    doc["monomials"] = ordered_json::array();
    for (const auto& m : prob.polynomial.monomials) {
        ordered_json jm;
        jm["coeff"] = value_to_string(m.coeff, sf);
        jm["exponents"] = ordered_json::array();
        for (const auto& e : m.exponents) jm["exponents"].push_back(to_string(e));
        doc["monomials"].push_back(std::move(jm));
    }
    ordered_json jbox;
    jbox["lower"] = ordered_json::array();
    jbox["upper"] = ordered_json::array();
    for (const auto& v : prob.box.lower) jbox["lower"].push_back(value_to_string(v, sf));
    for (const auto& v : prob.box.upper) jbox["upper"].push_back(value_to_string(v, sf));
    doc["box"] = std::move(jbox);
    return doc.dump(2) + "\n";
}

} // namespace tropelim
