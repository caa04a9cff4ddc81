#include "orthint/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "orthint/errors.hpp"

namespace orthint {

namespace {

using IntPoly = std::vector<Integer>;

Integer intContent(const IntPoly& p) {
    Integer g = 0;
    for (const Integer& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

void makePrimitive(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return;
    Integer g = intContent(p);
    if (p.back() < 0) g = -g;
    for (Integer& c : p) c /= g;
}

// Pseudo-remainder of lc(b)^(da-db+1) * a modulo b.
IntPoly pseudoRemainder(IntPoly a, const IntPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const Integer lead = a.back();
        for (Integer& c : a) c *= b.back();
        for (int i = 0; i <= db; ++i)
            a[da - db + i] -= lead * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

} // namespace

PolynomialN::PolynomialN(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

PolynomialN::PolynomialN(std::initializer_list<Rational> ascendingCoeffs)
    : coeffs_(ascendingCoeffs) {
    trim();
}

PolynomialN::PolynomialN(std::vector<Rational> ascendingCoeffs)
    : coeffs_(std::move(ascendingCoeffs)) {
    trim();
}

PolynomialN PolynomialN::variable() { return PolynomialN{Rational(0), Rational(1)}; }

PolynomialN PolynomialN::linear(const Rational& shift) {
    return PolynomialN{shift, Rational(1)};
}

const Rational& PolynomialN::leadingCoefficient() const {
    if (coeffs_.empty())
        throw DivisionByZero("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational PolynomialN::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[degree];
}

Rational PolynomialN::evaluate(const Rational& n) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

PolynomialN PolynomialN::operator-() const {
    PolynomialN r(*this);
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

PolynomialN PolynomialN::operator+(const PolynomialN& other) const {
    std::vector<Rational> sum(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) sum[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) sum[i] += other.coeffs_[i];
    return PolynomialN(std::move(sum));
}

PolynomialN PolynomialN::operator-(const PolynomialN& other) const {
    return *this + (-other);
}

PolynomialN PolynomialN::operator*(const PolynomialN& other) const {
    if (isZero() || other.isZero()) return {};
    std::vector<Rational> prod(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
    return PolynomialN(std::move(prod));
}

PolynomialN PolynomialN::operator*(const Rational& scalar) const {
    if (scalar == 0) return {};
    PolynomialN r(*this);
    for (Rational& c : r.coeffs_) c *= scalar;
    return r;
}

Rational PolynomialN::content() const {
    if (isZero()) throw DivisionByZero("content of the zero polynomial");
    Integer num = 0;
    Integer den = 1;
    for (const Rational& c : coeffs_) {
        num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(c));
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    }
    return Rational(num, den);
}

PolynomialN PolynomialN::divideExact(const PolynomialN& divisor) const {
    if (divisor.isZero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<Rational> quot;
    if (degree() >= dd) quot.assign(degree() - dd + 1, Rational(0));
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        const int dr = static_cast<int>(rem.size()) - 1;
        Rational q = rem.back() / divisor.leadingCoefficient();
        quot[dr - dd] = q;
        for (int i = 0; i <= dd; ++i)
            rem[dr - dd + i] -= q * divisor.coeffs_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    if (!rem.empty())
        throw DivisionByZero("inexact polynomial division");
    return PolynomialN(std::move(quot));
}

PolynomialN PolynomialN::gcd(const PolynomialN& a, const PolynomialN& b) {
    if (a.isZero() && b.isZero()) return {};
    if (a.isZero() || b.isZero()) {
        const PolynomialN& nz = a.isZero() ? b : a;
        return nz * (Rational(1) / nz.leadingCoefficient());
    }
    auto toPrimitiveInt = [](const PolynomialN& p) {
        const Rational c = p.content();
        IntPoly out;
        out.reserve(p.coeffs_.size());
        for (const Rational& x : p.coeffs_)
            out.push_back(boost::multiprecision::numerator(Rational(x / c)));
        if (out.back() < 0)
            for (Integer& v : out) v = -v;
        return out;
    };
    IntPoly u = toPrimitiveInt(a);
    IntPoly v = toPrimitiveInt(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        IntPoly r = pseudoRemainder(u, v);
        makePrimitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (const Integer& c : u) out.emplace_back(c, u.back());
    return PolynomialN(std::move(out));
}

std::string PolynomialN::render() const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational c = coeffs_[d];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        const Rational mag = boost::multiprecision::abs(c);
        if (mag != 1 || d == 0) {
            os << boost::multiprecision::numerator(mag).str();
            if (boost::multiprecision::denominator(mag) != 1)
                os << '/' << boost::multiprecision::denominator(mag).str();
        }
        if (d == 1)
            os << 'N';
        else if (d > 1)
            os << "N^" << d;
    }
    return os.str();
}

void PolynomialN::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

} // namespace orthint
