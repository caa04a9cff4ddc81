#include "orthint/power_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orthint/errors.hpp"

namespace orthint {

namespace {

bool isZeroRow(const std::vector<int>& row) {
    return std::all_of(row.begin(), row.end(), [](int x) { return x == 0; });
}

std::vector<std::vector<int>> transposeBlock(const std::vector<std::vector<int>>& m,
                                             int columns) {
    std::vector<std::vector<int>> t(columns, std::vector<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < columns; ++j)
            t[j][i] = m[i][j];
    return t;
}

// Drops all-zero rows and columns; they contribute no factor to the monomial.
std::vector<std::vector<int>> strippedSupport(const std::vector<std::vector<int>>& m) {
    if (m.empty()) return {};
    const int columns = static_cast<int>(m[0].size());
    std::vector<int> keep;
    for (int c = 0; c < columns; ++c) {
        bool nonzero = false;
        for (const auto& row : m) nonzero = nonzero || row[c] != 0;
        if (nonzero) keep.push_back(c);
    }
    std::vector<std::vector<int>> out;
    for (const auto& row : m) {
        if (isZeroRow(row)) continue;
        std::vector<int> r(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) r[j] = row[keep[j]];
        out.push_back(std::move(r));
    }
    return out;
}

// Lexicographically smallest matrix over all column permutations with rows
// sorted; invariant under arbitrary row and column permutations.
std::vector<std::vector<int>> minimalArrangement(const std::vector<std::vector<int>>& m) {
    if (m.empty()) return {};
    const int columns = static_cast<int>(m[0].size());
    std::vector<int> perm(columns);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    do {
        std::vector<std::vector<int>> candidate(m.size(), std::vector<int>(columns));
        for (size_t i = 0; i < m.size(); ++i)
            for (int j = 0; j < columns; ++j)
                candidate[i][j] = m[i][perm[j]];
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() || candidate < best) best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string serialize(const std::vector<std::vector<int>>& m) {
    std::ostringstream os;
    os << m.size() << 'x' << (m.empty() ? 0 : m[0].size()) << ':';
    for (const auto& row : m) {
        for (int x : row) os << x << ',';
        os << ';';
    }
    return os.str();
}

} // namespace

PowerMatrix::PowerMatrix(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw ShapeError("power matrix needs at least one row");
    columns_ = static_cast<int>(rows.front().size());
    if (columns_ < 1) throw ShapeError("power matrix needs at least one column");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != columns_)
            throw ShapeError("ragged rows in power matrix");
        for (int x : row)
            if (x < 0) throw InvalidExponent("negative exponent in power matrix");
    }
    rows_ = rows;
    while (!rows_.empty() && isZeroRow(rows_.back())) rows_.pop_back();
}

PowerMatrix::PowerMatrix(std::vector<std::vector<int>> rows, int columns, Raw)
    : rows_(std::move(rows)), columns_(columns) {
    while (!rows_.empty() && isZeroRow(rows_.back())) rows_.pop_back();
}

int PowerMatrix::entry(int row, int column) const {
    if (column < 0 || column >= columns_ || row < 0)
        throw IndexOutOfRange("power matrix index out of range");
    if (row >= supportRows()) return 0;
    return rows_[row][column];
}

int PowerMatrix::rowSum(int row) const {
    if (row < 0) throw IndexOutOfRange("negative row");
    if (row >= supportRows()) return 0;
    return componentSum(rows_[row]);
}

int PowerMatrix::columnSum(int column) const {
    if (column < 0 || column >= columns_)
        throw IndexOutOfRange("column out of range");
    int s = 0;
    for (const auto& row : rows_) s += row[column];
    return s;
}

int PowerMatrix::totalDegree() const {
    int s = 0;
    for (const auto& row : rows_) s += componentSum(row);
    return s;
}

int PowerMatrix::validityBound() const {
    return std::max(columnCount(), std::max(supportRows(), 1));
}

bool PowerMatrix::isVanishingByParity() const {
    for (const auto& row : rows_)
        if (componentSum(row) % 2 != 0) return true;
    for (int c = 0; c < columns_; ++c)
        if (columnSum(c) % 2 != 0) return true;
    return false;
}

std::string PowerMatrix::canonicalKey() const {
    const auto block = strippedSupport(rows_);
    const std::string a = serialize(minimalArrangement(block));
    const std::string b = serialize(minimalArrangement(
        transposeBlock(block, block.empty() ? 0 : static_cast<int>(block[0].size()))));
    return std::min(a, b);
}

VectorIndex PowerMatrix::lastColumn() const {
    VectorIndex v(supportRows());
    for (int i = 0; i < supportRows(); ++i) v[i] = rows_[i][columns_ - 1];
    return v;
}

PowerMatrix PowerMatrix::dropLastColumn() const {
    if (columns_ < 2)
        throw ShapeError("cannot drop the only column of a power matrix");
    std::vector<std::vector<int>> rows = rows_;
    for (auto& row : rows) row.pop_back();
    return PowerMatrix(std::move(rows), columns_ - 1, Raw{});
}

PowerMatrix PowerMatrix::addIndex(const MatrixIndex& k) const {
    if (static_cast<int>(k.size()) < supportRows())
        throw ShapeError("index matrix has fewer rows than the support");
    std::vector<std::vector<int>> rows = rows_;
    rows.resize(k.size(), std::vector<int>(columns_, 0));
    for (size_t i = 0; i < k.size(); ++i) {
        if (static_cast<int>(k[i].size()) != columns_)
            throw ShapeError("index matrix column count mismatch");
        for (int j = 0; j < columns_; ++j) {
            if (k[i][j] < 0) throw InvalidExponent("negative entry in index matrix");
            rows[i][j] += k[i][j];
        }
    }
    return PowerMatrix(std::move(rows), columns_, Raw{});
}

PowerMatrix PowerMatrix::transposedSupport() const {
    if (rows_.empty()) {
        // Zero support transposes to a single zero column of width r = 0;
        // keep a 1-column zero matrix so the invariant R >= 1 holds.
        return PowerMatrix(std::vector<std::vector<int>>{{0}});
    }
    return PowerMatrix(transposeBlock(rows_, columns_), supportRows(), Raw{});
}

} // namespace orthint
