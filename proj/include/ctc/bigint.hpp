#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ctc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_decimal(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

BigInt binomial(int n, int k);
BigInt pow2(int e);

}  // namespace ctc
