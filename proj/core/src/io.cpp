#include "orthint/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "orthint/errors.hpp"

namespace orthint {

namespace {

PowerMatrix parseJsonMatrix(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1,
                         static_cast<int>(e.byte));
    }
    if (!doc.is_array())
        throw ParseError("expected a JSON array of arrays", 1, 1);
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc) {
        if (!row.is_array())
            throw ParseError("expected a JSON array of arrays", 1, 1);
        std::vector<int> r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer())
                throw ParseError("matrix entries must be integers", 1, 1);
            r.push_back(cell.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return PowerMatrix(rows);
}

PowerMatrix parseGridMatrix(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    int lineNumber = 0;
    while (std::getline(lines, line)) {
        ++lineNumber;
        std::vector<int> row;
        size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (pos >= line.size()) break;
            size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            const std::string token = line.substr(pos, end - pos);
            try {
                size_t consumed = 0;
                const int value = std::stoi(token, &consumed);
                if (consumed != token.size()) throw std::invalid_argument(token);
                row.push_back(value);
            } catch (const std::exception&) {
                throw ParseError("not an integer: '" + token + "'", lineNumber,
                                 static_cast<int>(pos) + 1);
            }
            pos = end;
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", 1, 1);
    return PowerMatrix(rows);
}

std::string rationalString(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

} // namespace

PowerMatrix parseMatrix(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') return parseJsonMatrix(text);
        return parseGridMatrix(text);
    }
    throw ParseError("empty matrix", 1, 1);
}

std::string renderMatrix(const PowerMatrix& m) {
    std::ostringstream os;
    const int rows = std::max(m.supportRows(), 1);
    for (int i = 0; i < rows; ++i) {
        for (int c = 0; c < m.columnCount(); ++c) {
            if (c > 0) os << ' ';
            os << m.entry(i, c);
        }
        os << '\n';
    }
    return os.str();
}

std::string jsonResult(const RationalFunctionN& value, int validFromN) {
    nlohmann::json doc;
    doc["numerator"] = nlohmann::json::array();
    for (const Rational& c : value.numerator().coefficients())
        doc["numerator"].push_back(rationalString(c));
    if (value.numerator().isZero()) doc["numerator"].push_back("0/1");
    doc["denominator"] = nlohmann::json::array();
    for (const Rational& c : value.denominator().coefficients())
        doc["denominator"].push_back(rationalString(c));
    doc["validFromN"] = validFromN;
    doc["factored"] = value.renderFactored();
    return doc.dump();
}

} // namespace orthint
