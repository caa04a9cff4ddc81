#include "orthint/combinatorics.hpp"

#include "orthint/errors.hpp"

namespace orthint {

namespace {

// Compositions of total into parts nonnegative summands, lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(parts, 0);
    auto recurse = [&](auto&& self, int position, int remaining) -> void {
        if (position == parts - 1) {
            current[position] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[position] = v;
            self(self, position + 1, remaining - v);
        }
    };
    if (parts > 0) recurse(recurse, 0, total);
    return out;
}

} // namespace

Integer vectorBinomial(const VectorIndex& n, const VectorIndex& k) {
    if (n.size() != k.size())
        throw ShapeError("vector binomial length mismatch");
    Integer r = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        if (k[i] < 0 || k[i] > n[i])
            throw IndexOutOfRange("binomial index exceeds its upper vector");
        r *= binomial(n[i], k[i]);
    }
    return r;
}

Integer matrixMultinomial(const VectorIndex& n, const MatrixIndex& k) {
    if (n.size() != k.size())
        throw ShapeError("multinomial row count mismatch");
    Integer r = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        int rowSum = 0;
        Integer denom = 1;
        for (int v : k[i]) {
            rowSum += v;
            denom *= factorial(v);
        }
        if (rowSum != n[i])
            throw RowSumMismatch("multinomial row does not sum to its total");
        r *= factorial(n[i]) / denom;
    }
    return r;
}

std::vector<VectorIndex> enumerateEvenKappa(const VectorIndex& m) {
    std::vector<VectorIndex> out;
    VectorIndex current(m.size(), 0);
    auto recurse = [&](auto&& self, size_t position) -> void {
        if (position == m.size()) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= m[position]; v += 2) {
            current[position] = v;
            self(self, position + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<MatrixIndex> enumerateKMatrices(const VectorIndex& rowTotals, int columns) {
    if (columns < 1)
        throw ShapeError("index matrix needs at least one column");
    std::vector<std::vector<std::vector<int>>> perRow;
    perRow.reserve(rowTotals.size());
    for (int total : rowTotals) perRow.push_back(compositions(total, columns));

    std::vector<MatrixIndex> out;
    MatrixIndex current(rowTotals.size());
    auto recurse = [&](auto&& self, size_t row) -> void {
        if (row == rowTotals.size()) {
            for (int c = 0; c < columns; ++c) {
                int colSum = 0;
                for (const auto& r : current) colSum += r[c];
                if (colSum % 2 != 0) return;
            }
            out.push_back(current);
            return;
        }
        for (const auto& candidate : perRow[row]) {
            current[row] = candidate;
            self(self, row + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace orthint
