#ifndef ORTHINT_IO_HPP
#define ORTHINT_IO_HPP

#include <string>

#include "orthint/power_matrix.hpp"
#include "orthint/rational_function.hpp"

namespace orthint {

/// Parses a power matrix from either a whitespace grid of integers or a JSON
/// array-of-arrays; the format is detected from the first non-space character.
PowerMatrix parseMatrix(const std::string& text);

/// Whitespace-grid rendering that parseMatrix round-trips.
std::string renderMatrix(const PowerMatrix& m);

/// {"numerator": [...], "denominator": [...], "validFromN": k,
///  "factored": "..."} with coefficients as "p/q" strings, ascending degree.
std::string jsonResult(const RationalFunctionN& value, int validFromN);

} // namespace orthint

#endif
