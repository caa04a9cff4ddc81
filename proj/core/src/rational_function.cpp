#include "orthint/rational_function.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "orthint/errors.hpp"

namespace orthint {

namespace {

// Splits f into (p/q) * P / D with P, D primitive integer polynomials with
// positive leading coefficients. Returns {p, q, P, D}.
struct IntegerScaledForm {
    Integer p;
    Integer q;
    PolynomialN numerator;
    PolynomialN denominator;
};

IntegerScaledForm integerScaled(const PolynomialN& num, const PolynomialN& den) {
    Rational scale = num.content();
    if (num.leadingCoefficient() < 0) scale = -scale;
    IntegerScaledForm out;
    out.p = boost::multiprecision::numerator(scale);
    out.q = boost::multiprecision::denominator(scale);
    out.numerator = num * (Rational(1) / scale);
    out.denominator = den;
    return out;
}

std::string renderRational(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

// Extracts monic linear factors (N - root) by integer-root scanning.
// On success fills shift->multiplicity (factor is N + shift) and the leftover
// constant; returns false if a non-linear factor remains.
bool factorIntoLinearShifts(const PolynomialN& den, std::map<Integer, int>& shifts,
                            Integer& leftover) {
    PolynomialN rest = den;
    while (rest.degree() > 0) {
        Integer root;
        bool found = false;
        if (rest.coefficient(0) == 0) {
            root = 0;
            found = true;
        } else {
            // Rational root theorem: integer roots divide the constant term.
            const Integer c0 = boost::multiprecision::abs(
                boost::multiprecision::numerator(rest.coefficient(0)));
            for (Integer d = 1; d * d <= c0 && !found; ++d) {
                if (c0 % d != 0) continue;
                for (const Integer& cand :
                     {d, Integer(-d), Integer(c0 / d), Integer(-(c0 / d))}) {
                    if (rest.evaluate(Rational(cand)) == 0) {
                        root = cand;
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) return false;
        shifts[-root] += 1;
        rest = rest.divideExact(PolynomialN::linear(Rational(-root)));
    }
    const Rational c = rest.coefficient(0);
    if (boost::multiprecision::denominator(c) != 1) return false;
    leftover = boost::multiprecision::numerator(c);
    return true;
}

std::string renderShiftFactor(const Integer& shift, int multiplicity) {
    std::string base;
    if (shift == 0)
        base = "N";
    else if (shift > 0)
        base = "(N+" + shift.str() + ")";
    else
        base = "(N-" + Integer(-shift).str() + ")";
    if (multiplicity > 1) base += "^" + std::to_string(multiplicity);
    return base;
}

std::string renderOverDenominator(const PolynomialN& numInt,
                                  const std::vector<std::string>& denPieces) {
    std::string numStr = numInt.render();
    if (denPieces.empty()) return numStr;
    // Multi-term numerators get wrapped so the quotient reads unambiguously.
    if (numInt.degree() > 0 &&
        numStr.find_first_of("+-", 1) != std::string::npos)
        numStr = "(" + numStr + ")";
    std::string denStr;
    for (const auto& piece : denPieces) denStr += piece;
    if (denPieces.size() > 1) denStr = "(" + denStr + ")";
    return numStr + "/" + denStr;
}

} // namespace

RationalFunctionN::RationalFunctionN(PolynomialN numerator, PolynomialN denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.isZero()) throw DivisionByZero("zero denominator");
    normalize();
}

RationalFunctionN RationalFunctionN::constant(const Rational& value) {
    return RationalFunctionN(PolynomialN(value));
}

void RationalFunctionN::normalize() {
    if (num_.isZero()) {
        den_ = PolynomialN(Rational(1));
        return;
    }
    const PolynomialN g = PolynomialN::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divideExact(g);
        den_ = den_.divideExact(g);
    }
    Rational scale = den_.content();
    if (den_.leadingCoefficient() < 0) scale = -scale;
    const Rational inv = Rational(1) / scale;
    num_ = num_ * inv;
    den_ = den_ * inv;
}

RationalFunctionN RationalFunctionN::operator-() const {
    RationalFunctionN r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunctionN RationalFunctionN::operator+(const RationalFunctionN& other) const {
    return RationalFunctionN(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunctionN RationalFunctionN::operator-(const RationalFunctionN& other) const {
    return *this + (-other);
}

RationalFunctionN RationalFunctionN::operator*(const RationalFunctionN& other) const {
    return RationalFunctionN(num_ * other.num_, den_ * other.den_);
}

RationalFunctionN RationalFunctionN::operator*(const Rational& scalar) const {
    return RationalFunctionN(num_ * scalar, den_);
}

RationalFunctionN RationalFunctionN::operator/(const RationalFunctionN& other) const {
    if (other.isZero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunctionN(num_ * other.den_, den_ * other.num_);
}

RationalFunctionN RationalFunctionN::reciprocal() const {
    return one() / *this;
}

Rational RationalFunctionN::evaluateAt(const Rational& n) const {
    const Rational d = den_.evaluate(n);
    if (d == 0) throw PoleAtN("denominator vanishes at N = " + renderRational(n));
    return num_.evaluate(n) / d;
}

std::string RationalFunctionN::renderFactored() const {
    if (isZero()) return "0";
    const IntegerScaledForm f = integerScaled(num_, den_);

    std::map<Integer, int> shifts;
    Integer leftover = 1;
    if (!factorIntoLinearShifts(f.denominator, shifts, leftover))
        return renderExpanded();

    const Integer denConst = f.q * leftover;
    const PolynomialN numInt = f.numerator * Rational(f.p);
    std::vector<std::string> pieces;
    if (denConst != 1) pieces.push_back(denConst.str());
    for (const auto& [shift, mult] : shifts)
        pieces.push_back(renderShiftFactor(shift, mult));
    return renderOverDenominator(numInt, pieces);
}

std::string RationalFunctionN::renderExpanded() const {
    if (isZero()) return "0";
    const IntegerScaledForm f = integerScaled(num_, den_);
    const PolynomialN numInt = f.numerator * Rational(f.p);
    const PolynomialN denInt = f.denominator * Rational(f.q);
    if (denInt == PolynomialN(Rational(1))) return numInt.render();
    std::string denStr = denInt.render();
    if (denStr.find_first_of("+-", 1) != std::string::npos)
        denStr = "(" + denStr + ")";
    std::vector<std::string> pieces{denStr};
    return renderOverDenominator(numInt, pieces);
}

} // namespace orthint
