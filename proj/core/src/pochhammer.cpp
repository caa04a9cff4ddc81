#include "orthint/pochhammer.hpp"

namespace orthint {

RationalFunctionN pochShiftedN(int offset, int j) {
    PolynomialN p(Rational(1, Integer(1) << j));
    for (int t = 0; t < j; ++t)
        p = p * PolynomialN::linear(Rational(offset + 2 * t));
    return RationalFunctionN(std::move(p));
}

RationalFunctionN pochIntegerN(int offset, int j) {
    PolynomialN p{Rational(1)};
    for (int t = 0; t < j; ++t)
        p = p * PolynomialN::linear(Rational(offset + t));
    return RationalFunctionN(std::move(p));
}

} // namespace orthint
