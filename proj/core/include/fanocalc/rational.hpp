#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fano {

// All integer arithmetic that can outgrow 64 bits (Weyl dimension products,
// Catalan numbers, Hilbert series coefficients) goes through cpp_int.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace fano
