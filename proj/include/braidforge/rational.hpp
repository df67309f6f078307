#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "braidforge/errors.hpp"

namespace braidforge {

// Exact arbitrary-precision scalars. Matrix entries grow quickly under
// row reduction, so fixed-width integers are not an option anywhere on
// the certification path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical rational from a (possibly negative, possibly unreduced) pair.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);  // cpp_rational reduces to lowest terms
}

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p" or "p/q" with optional sign. Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        Int p{std::string(text.substr(0, slash))};
        Int q{std::string(text.substr(slash + 1))};
        return make_rational(std::move(p), std::move(q));
    } catch (const DivisionByZeroError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

}  // namespace braidforge
