// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <iomanip>
#include <sstream>
#include <string>

namespace regraph {

// All counts and normalization constants are exact integers; all decisions
// compare integers or exact rationals. Floating point appears only in
// rendered output.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// n * (n-1) * ... * (n-k+1). Zero when k > n, one when k == 0.
inline BigInt falling_factorial(int n, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= (n - i);
    return out;
}

inline double to_double(const BigRat& value) {
    using F = boost::multiprecision::cpp_bin_float_50;
    if (boost::multiprecision::denominator(value) == 0) return 0.0;
    F num(boost::multiprecision::numerator(value));
    F den(boost::multiprecision::denominator(value));
    return static_cast<double>(num / den);
}

// Shortest decimal form with `digits` significant digits.
inline std::string decimal_string(const BigRat& value, int digits = 12) {
    using F = boost::multiprecision::cpp_bin_float_50;
    F num(boost::multiprecision::numerator(value));
    F den(boost::multiprecision::denominator(value));
    std::ostringstream os;
    os << std::setprecision(digits) << (den == 0 ? F(0) : F(num / den));
    return os.str();
}

}  // namespace regraph
