#include <doctest.h>

#include "orthint/combinatorics.hpp"
#include "orthint/errors.hpp"

using namespace orthint;

TEST_CASE("vector binomial") {
    CHECK(vectorBinomial({2, 4}, {2, 2}) == 6);
    CHECK(vectorBinomial({0, 0}, {0, 0}) == 1);
    CHECK(vectorBinomial({1, 1}, {0, 0}) == 1);
    CHECK_THROWS_AS(vectorBinomial({1}, {2}), IndexOutOfRange);
    CHECK_THROWS_AS(vectorBinomial({1, 1}, {1}), ShapeError);
}

TEST_CASE("matrix multinomial") {
    CHECK(matrixMultinomial({2}, {{1, 1}}) == 2);
    CHECK(matrixMultinomial({2}, {{2, 0}}) == 1);
    CHECK(matrixMultinomial({3, 1}, {{2, 1}, {1, 0}}) == 3);
    CHECK_THROWS_AS(matrixMultinomial({2}, {{1, 0}}), RowSumMismatch);
}

TEST_CASE("even kappa enumeration") {
    CHECK(enumerateEvenKappa({2, 0}) ==
          std::vector<VectorIndex>{{0, 0}, {2, 0}});
    CHECK(enumerateEvenKappa({1, 1}) == std::vector<VectorIndex>{{0, 0}});
    CHECK(enumerateEvenKappa({4}) == std::vector<VectorIndex>{{0}, {2}, {4}});
}

TEST_CASE("K-matrix enumeration keeps even column sums") {
    CHECK(enumerateKMatrices({2}, 2) ==
          std::vector<MatrixIndex>{{{0, 2}}, {{2, 0}}});
    CHECK(enumerateKMatrices({1, 1}, 1) ==
          std::vector<MatrixIndex>{{{1}, {1}}});
    CHECK(enumerateKMatrices({0, 0}, 3) ==
          std::vector<MatrixIndex>{{{0, 0, 0}, {0, 0, 0}}});
}

TEST_CASE("K-matrix enumeration covers all row compositions") {
    // row totals (2,2) into 2 columns: 9 compositions, 5 with even column sums
    const auto all = enumerateKMatrices({2, 2}, 2);
    CHECK(all.size() == 5);
    for (const auto& k : all) {
        CHECK(k[0][0] + k[0][1] == 2);
        CHECK(k[1][0] + k[1][1] == 2);
        CHECK((k[0][0] + k[1][0]) % 2 == 0);
        CHECK((k[0][1] + k[1][1]) % 2 == 0);
    }
}
