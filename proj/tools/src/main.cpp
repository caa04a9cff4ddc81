#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthint/errors.hpp"
#include "orthint/io.hpp"
#include "orthint/request.hpp"

namespace {

std::string loadMatrixText(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monomial integrals over the orthogonal group O(N)"};

    std::string matrixSpec;
    std::string method = "auto";
    std::string format = "factored";
    int evalN = 0;
    std::uint64_t mcSamples = 0;
    std::uint64_t seed = 1;
    bool unitary = false;

    app.add_option("--matrix", matrixSpec,
                   "Power matrix: inline text, a file path, or '-' for stdin")
        ->required();
    app.add_option("--method", method, "auto|recursion|two-vector|ullah")
        ->check(CLI::IsMember({"auto", "recursion", "two-vector", "ullah"}));
    app.add_option("--eval", evalN, "Evaluate the result at a concrete N");
    app.add_option("--mc-samples", mcSamples,
                   "Verify against a Monte Carlo estimate (needs --eval)");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--format", format, "factored|expanded|json")
        ->check(CLI::IsMember({"factored", "expanded", "json"}));
    app.add_flag("--unitary", unitary,
                 "One-vector unitary mode: two columns read as m : n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    orthint::Request request;
    try {
        request.matrix = orthint::parseMatrix(loadMatrixText(matrixSpec));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    using Method = orthint::IntegratorConfig::Method;
    if (method == "recursion")
        request.config.method = Method::RecursionOnly;
    else if (method == "two-vector")
        request.config.method = Method::TwoVectorClosed;
    else if (method == "ullah")
        request.config.method = Method::Ullah;

    if (evalN > 0) request.evalN = evalN;
    if (mcSamples > 0) request.mcSamples = mcSamples;
    request.seed = seed;
    request.unitary = unitary;
    if (format == "expanded")
        request.format = orthint::Request::Format::Expanded;
    else if (format == "json")
        request.format = orthint::Request::Format::Json;

    try {
        return orthint::run(request, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
