#ifndef ORTHINT_RATIONAL_HPP
#define ORTHINT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace orthint {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (2 * k > n) k = n - k;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// (n-1)!! with the conventions (-1)!! = 0!! = 1.
inline Integer doubleFactorial(int n) {
    Integer r = 1;
    for (int i = n; i >= 2; i -= 2) r *= i;
    return r;
}

/// Rising factorial (1/2)_j = prod_{t=0}^{j-1} (1/2 + t) = (2j-1)!! / 2^j.
inline Rational pochHalfConstant(int j) {
    return Rational(doubleFactorial(2 * j - 1), Integer(1) << j);
}

} // namespace orthint

#endif
