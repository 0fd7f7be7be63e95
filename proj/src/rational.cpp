#include "rational.hpp"

#include <cctype>

namespace cws {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("MalformedRational", "empty rational literal");
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    auto slash = text.find('/');
    auto dot = text.find('.');

    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw ParseError("MalformedRational", "zero denominator: " + text);
            return Rational(num, den);
        }
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            size_t frac_len = text.size() - dot - 1;
            if (!all_digits(digits, start, digits.size()))
                throw ParseError("MalformedRational", "bad decimal literal: " + text);
            BigInt num(digits);
            BigInt den = 1;
            for (size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rational(num, den);
        }
        if (!all_digits(text, start, text.size()))
            throw ParseError("MalformedRational", "bad integer literal: " + text);
        return Rational(BigInt(text));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("MalformedRational", "cannot parse rational: " + text);
    }
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace cws
