#ifndef ORTHINT_POLYNOMIAL_HPP
#define ORTHINT_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "orthint/rational.hpp"

namespace orthint {

/// Univariate polynomial in the symbolic dimension N with exact rational
/// coefficients, stored ascending by degree with no trailing zeros.
class PolynomialN {
  public:
    PolynomialN() = default;
    explicit PolynomialN(Rational constant);
    PolynomialN(std::initializer_list<Rational> ascendingCoeffs);
    explicit PolynomialN(std::vector<Rational> ascendingCoeffs);

    static PolynomialN variable();                    // N
    static PolynomialN linear(const Rational& shift); // N + shift

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leadingCoefficient() const;
    Rational coefficient(int degree) const;

    Rational evaluate(const Rational& n) const;

    PolynomialN operator-() const;
    PolynomialN operator+(const PolynomialN& other) const;
    PolynomialN operator-(const PolynomialN& other) const;
    PolynomialN operator*(const PolynomialN& other) const;
    PolynomialN operator*(const Rational& scalar) const;

    bool operator==(const PolynomialN& other) const = default;

    /// Largest positive rational c such that *this / c has coprime integer
    /// coefficients. Requires a nonzero polynomial.
    Rational content() const;

    /// Quotient of exact division; throws DivisionByZero if the division
    /// leaves a remainder or the divisor is zero.
    PolynomialN divideExact(const PolynomialN& divisor) const;

    /// Monic-normalized gcd over the rationals, computed via a primitive
    /// Euclidean remainder sequence on the integer-content-normalized inputs.
    static PolynomialN gcd(const PolynomialN& a, const PolynomialN& b);

    /// Expanded caret-notation rendering, descending degree: "N^2+3N-2".
    std::string render() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace orthint

#endif
