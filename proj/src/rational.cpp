#include "tropelim/rational.hpp"

#include <cctype>

#include "tropelim/errors.hpp"

namespace tropelim {

namespace {

bool is_plain_integer(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    for (std::size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");

    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    auto slash = text.find('/');
    auto dot = text.find('.');

    if (slash != std::string::npos) {
        if (dot != std::string::npos || !is_plain_integer(text, start, slash) ||
            !is_plain_integer(text, slash + 1, text.size())) {
            throw ValidationError("malformed rational '" + text + "'");
        }
        Rational q;
        if (q.set_str(text, 10) != 0) throw ValidationError("malformed rational '" + text + "'");
        if (q.get_den() == 0) throw ValidationError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }

    if (dot != std::string::npos) {
        // Exact decimal: digits '.' digits, scaled by a power of ten.
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (!is_plain_integer(digits, start, digits.size())) {
            throw ValidationError("malformed decimal '" + text + "'");
        }
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    if (!is_plain_integer(text, start, text.size())) {
        throw ValidationError("malformed rational '" + text + "'");
    }
    Rational q;
    if (q.set_str(text, 10) != 0) throw ValidationError("malformed rational '" + text + "'");
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace tropelim
