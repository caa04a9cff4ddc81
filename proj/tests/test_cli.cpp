#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "orthint/errors.hpp"
#include "orthint/io.hpp"
#include "orthint/request.hpp"

using namespace orthint;

namespace {

using Rows = std::vector<std::vector<int>>;

Rational parseRational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

} // namespace

TEST_CASE("matrix parsing") {
    CHECK(parseMatrix("1 1\n1 1") == PowerMatrix(Rows{{1, 1}, {1, 1}}));
    CHECK(parseMatrix("[[2,0,0],[0,2,0],[0,0,2]]") ==
          PowerMatrix(Rows{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    CHECK_THROWS_AS(parseMatrix("1 x"), ParseError);
    CHECK_THROWS_AS(parseMatrix("[[-1]]"), InvalidExponent);
    CHECK_THROWS_AS(parseMatrix("  "), ParseError);
    CHECK_THROWS_AS(parseMatrix("[[1,2"), ParseError);
}

TEST_CASE("parse/render round trip") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> cell(0, 5);
    for (int i = 0; i < 50; ++i) {
        Rows rows(dim(rng), std::vector<int>(dim(rng)));
        for (auto& row : rows)
            for (int& x : row) x = cell(rng);
        const PowerMatrix m(rows);
        CHECK(parseMatrix(renderMatrix(m)) == m);
    }
}

TEST_CASE("json output reconstructs the reduced value") {
    const RationalFunctionN value = integrate(PowerMatrix(Rows{{1, 1}, {1, 1}}));
    const auto doc = nlohmann::json::parse(jsonResult(value, 2));
    CHECK(doc["validFromN"] == 2);
    CHECK(doc["factored"] == "-1/((N-1)N(N+2))");

    std::vector<Rational> num, den;
    for (const auto& c : doc["numerator"]) num.push_back(parseRational(c));
    for (const auto& c : doc["denominator"]) den.push_back(parseRational(c));
    CHECK(RationalFunctionN(PolynomialN(num), PolynomialN(den)) == value);
}

TEST_CASE("symbolic run prints value and validity bound") {
    Request request;
    request.matrix = parseMatrix("1 1\n1 1");
    std::ostringstream out, err;
    CHECK(run(request, out, err) == 0);
    CHECK(out.str() == "-1/((N-1)N(N+2))\nvalid for N >= 2\n");
}

TEST_CASE("eval run prints the exact rational") {
    Request request;
    request.matrix = parseMatrix("[[2,0,0],[0,2,0],[0,0,2]]");
    request.evalN = 5;
    std::ostringstream out, err;
    CHECK(run(request, out, err) == 0);
    CHECK(out.str() == "19/1890\n");
}

TEST_CASE("verify run passes on an easy moment") {
    Request request;
    request.matrix = parseMatrix("[[2]]");
    request.evalN = 5;
    request.mcSamples = 20000;
    request.seed = 11;
    std::ostringstream out, err;
    CHECK(run(request, out, err) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    Request request;
    request.matrix = parseMatrix("[[2]]");
    request.mcSamples = 1000; // no evalN
    std::ostringstream out, err;
    CHECK(run(request, out, err) == 2);

    Request unitaryBad;
    unitaryBad.matrix = parseMatrix("[[2]]");
    unitaryBad.unitary = true;
    std::ostringstream out2, err2;
    CHECK(run(unitaryBad, out2, err2) == 2);

    Request guarded;
    guarded.matrix = parseMatrix("[[70]]");
    std::ostringstream out3, err3;
    CHECK(run(guarded, out3, err3) == 2);
}

TEST_CASE("unitary run uses the m:n reading of the two columns") {
    Request request;
    request.matrix = parseMatrix("[[4,0]]");
    request.unitary = true;
    std::ostringstream out, err;
    CHECK(run(request, out, err) == 0);
    CHECK(out.str() == "3/(4N(N+1))\nvalid for N >= 1\n");
}
