#include <doctest.h>

#include <random>

#include "orthint/errors.hpp"
#include "orthint/pochhammer.hpp"
#include "orthint/rational_function.hpp"

using namespace orthint;

namespace {

const PolynomialN kN = PolynomialN::variable();

RationalFunctionN overPoly(const PolynomialN& den) {
    return RationalFunctionN(PolynomialN(Rational(1)), den);
}

PolynomialN randomPoly(std::mt19937& rng, int maxDegree = 6) {
    std::uniform_int_distribution<int> deg(0, maxDegree);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = Rational(num(rng), den(rng));
    return PolynomialN(std::move(coeffs));
}

} // namespace

TEST_CASE("half-Pochhammer constants") {
    CHECK(pochHalfConstant(0) == 1);
    CHECK(pochHalfConstant(1) == Rational(1, 2));
    CHECK(pochHalfConstant(2) == Rational(3, 4));
}

TEST_CASE("shifted-N Pochhammer polynomials") {
    CHECK(pochShiftedN(0, 1) == RationalFunctionN(kN * Rational(1, 2)));
    CHECK(pochShiftedN(0, 2) ==
          RationalFunctionN(kN * PolynomialN::linear(2) * Rational(1, 4)));
    CHECK(pochShiftedN(-1, 1) ==
          RationalFunctionN(PolynomialN::linear(-1) * Rational(1, 2)));
}

TEST_CASE("integer-N Pochhammer polynomials") {
    CHECK(pochIntegerN(-1, 2) == RationalFunctionN(PolynomialN::linear(-1) * kN));
    CHECK(pochIntegerN(0, 0) == RationalFunctionN::one());
    CHECK(pochIntegerN(0, 3) ==
          RationalFunctionN(kN * PolynomialN::linear(1) * PolynomialN::linear(2)));
}

TEST_CASE("shifted-N Pochhammer recurrence") {
    for (int offset : {-2, -1, 0, 3}) {
        for (int j = 0; j <= 10; ++j) {
            const RationalFunctionN step =
                RationalFunctionN(PolynomialN::linear(offset + 2 * j) * Rational(1, 2));
            CHECK(pochShiftedN(offset, j + 1) == pochShiftedN(offset, j) * step);
        }
    }
}

TEST_CASE("arithmetic reduces to normal form") {
    const RationalFunctionN oneOverN = overPoly(kN);
    CHECK(oneOverN + oneOverN ==
          RationalFunctionN(PolynomialN(Rational(2)), kN));

    // (N+1)/(N(N+2)) * N -> (N+1)/(N+2)
    const RationalFunctionN a(PolynomialN::linear(1), kN * PolynomialN::linear(2));
    CHECK(a * RationalFunctionN(kN) ==
          RationalFunctionN(PolynomialN::linear(1), PolynomialN::linear(2)));

    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        PolynomialN p = randomPoly(rng);
        if (p.isZero()) continue;
        const RationalFunctionN x(p, randomPoly(rng) + PolynomialN(Rational(1)));
        CHECK(x / x == RationalFunctionN::one());
        CHECK(x + (-x) == RationalFunctionN::zero());
    }
    CHECK_THROWS_AS(oneOverN / RationalFunctionN::zero(), DivisionByZero);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(17);
    for (int i = 0; i < 40; ++i) {
        const PolynomialN a = randomPoly(rng);
        const PolynomialN b = randomPoly(rng);
        const PolynomialN c = randomPoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a homomorphism away from poles") {
    std::mt19937 rng(29);
    for (int i = 0; i < 30; ++i) {
        const RationalFunctionN f(randomPoly(rng),
                                  randomPoly(rng) * kN + PolynomialN(Rational(1)));
        const RationalFunctionN g(randomPoly(rng),
                                  randomPoly(rng) * kN + PolynomialN(Rational(3)));
        std::uniform_int_distribution<int> pick(1, 12);
        const Rational n = pick(rng);
        try {
            const Rational lhs = (f * g).evaluateAt(n);
            CHECK(lhs == f.evaluateAt(n) * g.evaluateAt(n));
        } catch (const PoleAtN&) {
            // random denominator happened to vanish at n; skip
        }
    }
}

TEST_CASE("exact evaluation") {
    // (N^2+3N-2)/((N-2)(N-1)N(N+2)(N+4)) at N=5
    const PolynomialN num = kN * kN + kN * Rational(3) - PolynomialN(Rational(2));
    const PolynomialN den = PolynomialN::linear(-2) * PolynomialN::linear(-1) * kN *
                            PolynomialN::linear(2) * PolynomialN::linear(4);
    const RationalFunctionN f(num, den);
    CHECK(f.evaluateAt(5) == Rational(19, 1890));

    CHECK(overPoly(kN).evaluateAt(4) == Rational(1, 4));
    CHECK_THROWS_AS(overPoly(PolynomialN::linear(-2)).evaluateAt(2), PoleAtN);
}

TEST_CASE("factored rendering") {
    const PolynomialN num = kN * kN + kN * Rational(3) - PolynomialN(Rational(2));
    const PolynomialN den = PolynomialN::linear(-2) * PolynomialN::linear(-1) * kN *
                            PolynomialN::linear(2) * PolynomialN::linear(4);
    CHECK(RationalFunctionN(num, den).renderFactored() ==
          "(N^2+3N-2)/((N-2)(N-1)N(N+2)(N+4))");

    CHECK(RationalFunctionN::one().renderFactored() == "1");

    const PolynomialN den2 = PolynomialN::linear(-1) * kN * PolynomialN::linear(2);
    CHECK(RationalFunctionN(PolynomialN(Rational(-1)), den2).renderFactored() ==
          "-1/((N-1)N(N+2))");

    CHECK(overPoly(kN).renderFactored() == "1/N");
    CHECK(RationalFunctionN::constant(Rational(3, 4)).renderFactored() == "3/4");
}
