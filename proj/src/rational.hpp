#ifndef CWS_RATIONAL_HPP
#define CWS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace cws {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a/b", plain integers, and decimal literals like "1.5".
Rational parse_rational(const std::string& text);

// "a/b" when the denominator is not 1, plain integer string otherwise.
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

} // namespace cws

#endif
