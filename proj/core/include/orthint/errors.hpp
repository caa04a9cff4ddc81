#ifndef ORTHINT_ERRORS_HPP
#define ORTHINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthint {

struct InvalidExponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RowSumMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleAtN : std::domain_error {
    using std::domain_error::domain_error;
};

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& msg, int line, int column)
        : std::invalid_argument(msg + " (line " + std::to_string(line) +
                                ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

} // namespace orthint

#endif
