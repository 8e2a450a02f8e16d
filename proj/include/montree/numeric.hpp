#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

namespace montree {

// All counts are exact integers, all degree/probability arithmetic is exact
// rational. Floating point appears only in entropy/log computations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x(x-1)...(x-t+1); empty product = 1.
inline Rational falling_factorial(const Rational& x, unsigned t) {
    Rational out = 1;
    for (unsigned j = 0; j < t; ++j)
        out *= x - j;
    return out;
}

inline BigInt falling_factorial(BigInt x, unsigned t) {
    BigInt out = 1;
    for (unsigned j = 0; j < t; ++j)
        out *= x - j;
    return out;
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline double log_rational(const Rational& q) {
    // log of large exact rationals without overflowing the double conversion
    return std::log(to_double(Rational(numerator(q)))) -
           std::log(to_double(Rational(denominator(q))));
}

inline std::string rational_str(const Rational& q) {
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace montree
