#ifndef ORTHINT_RATIONAL_FUNCTION_HPP
#define ORTHINT_RATIONAL_FUNCTION_HPP

#include <string>

#include "orthint/polynomial.hpp"

namespace orthint {

/// Reduced ratio of two polynomials in N. Normal form: gcd(num, den) = 1,
/// denominator primitive over the integers with positive leading coefficient.
class RationalFunctionN {
  public:
    RationalFunctionN() : den_(Rational(1)) {} // zero
    RationalFunctionN(PolynomialN numerator, PolynomialN denominator);
    explicit RationalFunctionN(PolynomialN numerator)
        : RationalFunctionN(std::move(numerator), PolynomialN(Rational(1))) {}
    static RationalFunctionN constant(const Rational& value);
    static RationalFunctionN zero() { return {}; }
    static RationalFunctionN one() { return constant(1); }

    const PolynomialN& numerator() const { return num_; }
    const PolynomialN& denominator() const { return den_; }
    bool isZero() const { return num_.isZero(); }

    RationalFunctionN operator-() const;
    RationalFunctionN operator+(const RationalFunctionN& other) const;
    RationalFunctionN operator-(const RationalFunctionN& other) const;
    RationalFunctionN operator*(const RationalFunctionN& other) const;
    RationalFunctionN operator*(const Rational& scalar) const;
    RationalFunctionN operator/(const RationalFunctionN& other) const;
    RationalFunctionN reciprocal() const;

    bool operator==(const RationalFunctionN& other) const = default;

    /// Exact value at N = n; throws PoleAtN if the denominator vanishes there.
    Rational evaluateAt(const Rational& n) const;

    /// "(N^2+3N-2)/((N-2)(N-1)N(N+2)(N+4))": numerator expanded with integer
    /// coefficients, denominator split into integer-shift linear factors by
    /// integer-root scanning. Falls back to the expanded denominator when a
    /// non-linear factor remains.
    std::string renderFactored() const;

    /// Both numerator and denominator expanded, integer coefficients.
    std::string renderExpanded() const;

  private:
    void normalize();
    PolynomialN num_;
    PolynomialN den_;
};

} // namespace orthint

#endif
