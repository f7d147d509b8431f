#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace biform {

// All core arithmetic is exact. Rationals are kept in canonical reduced
// form with positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational factorial(int k) {
    Integer r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return Rational(r);
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Rational(r);
}

// Parses "a", "-a" or "a/b". Rejects zero denominators and garbage.
std::optional<Rational> parse_rational(const std::string& text);

// Renders "a" or "a/b", denominator always positive.
std::string rational_to_string(const Rational& value);

}  // namespace biform
