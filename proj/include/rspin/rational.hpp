#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rspin {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical serialization: "p/q", or just "p" when q == 1. No whitespace.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational: " + s);
    }
}

}  // namespace rspin
