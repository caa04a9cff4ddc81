#ifndef ORTHINT_REQUEST_HPP
#define ORTHINT_REQUEST_HPP

#include <cstdint>
#include <optional>
#include <ostream>

#include "orthint/integrator.hpp"
#include "orthint/power_matrix.hpp"

namespace orthint {

/// One CLI invocation. Mode is implied: --eval alone selects eval, --eval
/// together with --mc-samples selects verify, otherwise symbolic.
struct Request {
    PowerMatrix matrix{std::vector<std::vector<int>>{{0}}};
    IntegratorConfig config;
    std::optional<int> evalN;
    std::optional<std::uint64_t> mcSamples;
    std::uint64_t seed = 1;
    enum class Format { Factored, Expanded, Json };
    Format format = Format::Factored;
    bool unitary = false;
};

/// Runs the request, writing results to out and diagnostics to err.
/// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error.
int run(const Request& request, std::ostream& out, std::ostream& err);

} // namespace orthint

#endif
