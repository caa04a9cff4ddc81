#ifndef ORTHINT_COMBINATORICS_HPP
#define ORTHINT_COMBINATORICS_HPP

#include <vector>

#include "orthint/power_matrix.hpp"
#include "orthint/rational.hpp"

namespace orthint {

/// prod_i C(n_i, k_i); throws IndexOutOfRange unless k <= n componentwise.
Integer vectorBinomial(const VectorIndex& n, const VectorIndex& k);

/// prod_i n_i! / prod_xi K[i][xi]!; row i of K must sum to n_i.
Integer matrixMultinomial(const VectorIndex& n, const MatrixIndex& k);

/// All kappa with 0 <= kappa_i <= m_i and every component even, in
/// lexicographic order.
std::vector<VectorIndex> enumerateEvenKappa(const VectorIndex& m);

/// All nonnegative integer matrices with the given row sums whose column
/// sums are all even, in lexicographic order over concatenated rows.
std::vector<MatrixIndex> enumerateKMatrices(const VectorIndex& rowTotals, int columns);

} // namespace orthint

#endif
