#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hwl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int int_pow(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

/// base^exp for signed exponents; base must be nonzero when exp < 0.
inline Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw std::domain_error("rational_pow: 0 with negative exponent");
    Rational acc = 1;
    Rational b = exp > 0 ? base : Rational(1) / base;
    for (int k = std::abs(exp); k > 0; --k) acc *= b;
    return acc;
}

/// Canonical text form: "num" when the denominator is 1, "num/den" otherwise.
inline std::string rational_to_string(const Rational& q) {
    Int num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace hwl
