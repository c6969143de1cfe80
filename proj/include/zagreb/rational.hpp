#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zagreb {

// All bound/threshold arithmetic is exact.  cpp_rational keeps num/den
// normalized (gcd 1, positive denominator) and compares by cross
// multiplication at arbitrary precision, so graph-sized values (n <= 62,
// e <= 1891) as well as adversarial test inputs never overflow or round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// "7" or "49/3"; used by reports, which must be byte-stable.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

}  // namespace zagreb
