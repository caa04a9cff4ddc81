#ifndef ORTHINT_POWER_MATRIX_HPP
#define ORTHINT_POWER_MATRIX_HPP

#include <string>
#include <vector>

namespace orthint {

/// Nonnegative integer summation index (kappa and m of the closed forms).
using VectorIndex = std::vector<int>;

/// Nonnegative integer matrix index, stored row-major.
using MatrixIndex = std::vector<std::vector<int>>;

inline int componentSum(const VectorIndex& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

/// Matrix of nonnegative exponents defining a monomial in the elements of a
/// group matrix. Columns are the R vectors involved; rows beyond the stored
/// support are implicitly zero up to the symbolic dimension N. Canonical
/// storage trims trailing all-zero rows. Immutable after construction.
class PowerMatrix {
  public:
    /// Validates and canonicalizes; throws InvalidExponent on negative
    /// entries, ShapeError on ragged or empty input.
    explicit PowerMatrix(const std::vector<std::vector<int>>& rows);

    int supportRows() const { return static_cast<int>(rows_.size()); }
    int columnCount() const { return columns_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int column) const; // zero beyond the support

    int rowSum(int row) const;
    int columnSum(int column) const;
    int totalDegree() const;

    /// Smallest N for which the symbolic result is claimed valid: max(R, r).
    int validityBound() const;

    /// True guarantees the Haar integral of the monomial is zero: some row
    /// sum or column sum is odd.
    bool isVanishingByParity() const;

    /// Key shared by all matrices related by row/column permutation or
    /// transpose of the support block; all-zero rows and columns are ignored.
    /// Equal keys imply equal integrals.
    std::string canonicalKey() const;

    VectorIndex lastColumn() const; // length = supportRows
    PowerMatrix dropLastColumn() const;

    /// Componentwise sum with K (K may have more rows than the support; the
    /// matrix is padded with zero rows first). Result is re-trimmed.
    PowerMatrix addIndex(const MatrixIndex& k) const;

    PowerMatrix transposedSupport() const;

    bool operator==(const PowerMatrix& other) const = default;

  private:
    struct Raw {};
    PowerMatrix(std::vector<std::vector<int>> rows, int columns, Raw);
    std::vector<std::vector<int>> rows_;
    int columns_ = 1;
};

} // namespace orthint

#endif
