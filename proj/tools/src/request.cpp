#include "orthint/request.hpp"

#include <cmath>

#include "orthint/errors.hpp"
#include "orthint/io.hpp"
#include "orthint/oracle.hpp"

namespace orthint {

namespace {

std::string rationalText(const Rational& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

std::string renderValue(const RationalFunctionN& value, Request::Format format,
                        int validFromN) {
    switch (format) {
        case Request::Format::Expanded:
            return value.renderExpanded();
        case Request::Format::Json:
            return jsonResult(value, validFromN);
        default:
            return value.renderFactored();
    }
}

} // namespace

int run(const Request& request, std::ostream& out, std::ostream& err) {
    if (request.mcSamples && !request.evalN) {
        err << "error: --mc-samples requires --eval <N>\n";
        return 2;
    }
    if (request.unitary && request.mcSamples) {
        err << "error: Monte Carlo verification is not available in unitary mode\n";
        return 2;
    }

    RationalFunctionN value;
    int validFromN = 1;
    try {
        if (request.unitary) {
            if (request.matrix.columnCount() != 2) {
                err << "error: unitary mode takes a two-column matrix (m : n)\n";
                return 2;
            }
            VectorIndex m(request.matrix.supportRows()), n(request.matrix.supportRows());
            for (int i = 0; i < request.matrix.supportRows(); ++i) {
                m[i] = request.matrix.entry(i, 0);
                n[i] = request.matrix.entry(i, 1);
            }
            value = oneVectorUnitary(m, n);
            validFromN = std::max(1, request.matrix.supportRows());
        } else {
            value = integrate(request.matrix, request.config);
            validFromN = request.matrix.validityBound();
        }
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!request.evalN) {
        out << renderValue(value, request.format, validFromN) << "\n";
        if (request.format != Request::Format::Json)
            out << "valid for N >= " << validFromN << "\n";
        return 0;
    }

    const int n = *request.evalN;
    if (n < validFromN)
        err << "warning: N = " << n << " is below the validity bound "
            << validFromN << "\n";
    Rational exact;
    try {
        exact = value.evaluateAt(n);
    } catch (const PoleAtN& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!request.mcSamples) {
        out << rationalText(exact) << "\n";
        return 0;
    }

    const MomentEstimate estimate =
        mcMoment(request.matrix, n, *request.mcSamples, request.seed);
    const double exactDouble =
        static_cast<double>(boost::multiprecision::numerator(exact)) /
        static_cast<double>(boost::multiprecision::denominator(exact));
    const double deviation = std::abs(estimate.mean - exactDouble);
    const bool pass = deviation <= 4.0 * estimate.standardError;

    out << "symbolic: " << renderValue(value, request.format, validFromN) << "\n";
    out << "exact at N=" << n << ": " << rationalText(exact) << " ("
        << exactDouble << ")\n";
    out << "monte carlo: " << estimate.mean << " +/- " << estimate.standardError
        << " (" << estimate.samples << " samples, seed " << estimate.seed << ")\n";
    out << (pass ? "PASS" : "FAIL") << " (|deviation| = " << deviation
        << ", 4*SE = " << 4.0 * estimate.standardError << ")\n";
    return pass ? 0 : 1;
}

} // namespace orthint
