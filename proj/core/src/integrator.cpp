#include "orthint/integrator.hpp"

#include <algorithm>

#include "orthint/combinatorics.hpp"
#include "orthint/errors.hpp"
#include "orthint/pochhammer.hpp"

namespace orthint {

namespace {

bool anyOdd(const VectorIndex& v) {
    return std::any_of(v.begin(), v.end(), [](int x) { return x % 2 != 0; });
}

Rational pochHalfProduct(const VectorIndex& v) {
    Rational r = 1;
    for (int x : v) r *= pochHalfConstant(x / 2);
    return r;
}

// All k with 0 <= k_i <= m_i componentwise, lexicographic.
std::vector<VectorIndex> boundedVectors(const VectorIndex& m) {
    std::vector<VectorIndex> out;
    VectorIndex current(m.size(), 0);
    auto recurse = [&](auto&& self, size_t position) -> void {
        if (position == m.size()) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= m[position]; ++v) {
            current[position] = v;
            self(self, position + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

PowerMatrix pairColumns(const VectorIndex& m, const VectorIndex& n) {
    if (m.size() != n.size())
        throw ShapeError("two-vector integral needs index vectors of equal length");
    std::vector<std::vector<int>> rows;
    rows.reserve(std::max<size_t>(m.size(), 1));
    for (size_t i = 0; i < m.size(); ++i) rows.push_back({m[i], n[i]});
    if (rows.empty()) rows.push_back({0, 0});
    return PowerMatrix(rows);
}

} // namespace

RationalFunctionN oneVectorOrthogonal(const VectorIndex& m) {
    if (anyOdd(m)) return RationalFunctionN::zero();
    const int mbar = componentSum(m);
    return pochShiftedN(0, mbar / 2).reciprocal() * pochHalfProduct(m);
}

RationalFunctionN oneVectorUnitary(const VectorIndex& m, const VectorIndex& n) {
    if (m.size() != n.size())
        throw ShapeError("unitary one-vector integral needs equal-length indices");
    if (anyOdd(m) || anyOdd(n)) return RationalFunctionN::zero();
    const int total = componentSum(m) + componentSum(n);
    return pochIntegerN(0, total / 2).reciprocal() *
           (pochHalfProduct(m) * pochHalfProduct(n));
}

RationalFunctionN twoVectorClosed(const VectorIndex& m, const VectorIndex& n) {
    if (pairColumns(m, n).isVanishingByParity()) return RationalFunctionN::zero();
    const int nbar = componentSum(n);
    RationalFunctionN sum;
    for (const VectorIndex& kappa : enumerateEvenKappa(n)) {
        const int kbar = componentSum(kappa);
        VectorIndex shifted(m.size());
        for (size_t i = 0; i < m.size(); ++i)
            shifted[i] = m[i] + n[i] - kappa[i];
        const RationalFunctionN inner = oneVectorOrthogonal(shifted);
        if (inner.isZero()) continue;
        Rational c = Rational(vectorBinomial(n, kappa)) * pochHalfProduct(kappa) *
                     pochHalfConstant((nbar - kbar) / 2);
        if ((nbar - kbar) / 2 % 2 != 0) c = -c;
        sum = sum + inner * c;
    }
    return pochShiftedN(-1, nbar / 2).reciprocal() * sum;
}

RationalFunctionN twoVectorUllah(const VectorIndex& m, const VectorIndex& n) {
    if (pairColumns(m, n).isVanishingByParity()) return RationalFunctionN::zero();
    const int mbar = componentSum(m);
    const int nbar = componentSum(n);

    RationalFunctionN sum;
    for (const VectorIndex& k : boundedVectors(m)) {
        for (const VectorIndex& l : boundedVectors(n)) {
            VectorIndex kl(m.size()), rest(m.size());
            for (size_t i = 0; i < m.size(); ++i) {
                kl[i] = k[i] + l[i];
                rest[i] = m[i] - k[i] + n[i] - l[i];
            }
            if (anyOdd(kl) || anyOdd(rest)) continue;
            const RationalFunctionN product =
                oneVectorOrthogonal(kl) * oneVectorOrthogonal(rest);
            if (product.isZero()) continue;
            Rational c(vectorBinomial(m, k) * vectorBinomial(n, l));
            if (componentSum(l) % 2 != 0) c = -c;
            sum = sum + product * c;
        }
    }
    const RationalFunctionN prefactor =
        pochIntegerN(-1, (mbar + nbar) / 2) /
        (pochShiftedN(-1, mbar / 2) * pochShiftedN(-1, nbar / 2) *
         Rational(Integer(1) << (mbar + nbar)));
    return prefactor * sum;
}

std::vector<ReductionTerm> recursionReduce(const PowerMatrix& m) {
    if (m.columnCount() < 2)
        throw ShapeError("recursion step needs at least two columns");
    const VectorIndex lastCol = m.lastColumn();
    const int mbar = componentSum(lastCol);
    std::vector<ReductionTerm> terms;
    if (mbar % 2 != 0) return terms; // every candidate K has an odd column sum

    const int r = m.columnCount();
    const RationalFunctionN prefactor = pochShiftedN(1 - r, mbar / 2).reciprocal();
    const PowerMatrix head = m.dropLastColumn();

    for (const VectorIndex& kappa : enumerateEvenKappa(lastCol)) {
        const int kbar = componentSum(kappa);
        Rational base = Rational(vectorBinomial(lastCol, kappa)) * pochHalfProduct(kappa);
        if ((mbar - kbar) / 2 % 2 != 0) base = -base;

        VectorIndex rowTotals(lastCol.size());
        for (size_t i = 0; i < lastCol.size(); ++i)
            rowTotals[i] = lastCol[i] - kappa[i];

        for (const MatrixIndex& k : enumerateKMatrices(rowTotals, r - 1)) {
            Rational c = base * Rational(matrixMultinomial(rowTotals, k));
            for (int col = 0; col < r - 1; ++col) {
                int colSum = 0;
                for (const auto& row : k) colSum += row[col];
                c *= pochHalfConstant(colSum / 2);
            }
            terms.push_back({prefactor * c, head.addIndex(k)});
        }
    }
    return terms;
}

namespace {

RationalFunctionN integrateImpl(const PowerMatrix& m, const IntegratorConfig& cfg,
                                MemoCache& cache) {
    if (m.isVanishingByParity()) return RationalFunctionN::zero();
    const int r = m.columnCount();
    if (r == 1) return oneVectorOrthogonal(m.lastColumn());

    const std::string key = m.canonicalKey();
    if (auto hit = cache.lookup(key)) return *hit;

    RationalFunctionN result;
    const bool closedTwo =
        r == 2 && cfg.method != IntegratorConfig::Method::RecursionOnly;
    if (closedTwo) {
        VectorIndex first(m.supportRows()), second(m.supportRows());
        for (int i = 0; i < m.supportRows(); ++i) {
            first[i] = m.entry(i, 0);
            second[i] = m.entry(i, 1);
        }
        result = cfg.method == IntegratorConfig::Method::Ullah
                     ? twoVectorUllah(first, second)
                     : twoVectorClosed(first, second);
    } else {
        for (const ReductionTerm& term : recursionReduce(m))
            result = result + term.coefficient * integrateImpl(term.reduced, cfg, cache);
    }
    cache.store(key, result);
    return result;
}

} // namespace

RationalFunctionN integrate(const PowerMatrix& m, const IntegratorConfig& cfg,
                            MemoCache* cache) {
    if (cfg.degreeGuard <= 0 || cfg.columnGuard <= 0)
        throw GuardExceeded("integrator guards must be positive");
    if (m.totalDegree() > cfg.degreeGuard)
        throw GuardExceeded("total degree " + std::to_string(m.totalDegree()) +
                            " exceeds the guard " + std::to_string(cfg.degreeGuard));
    if (m.columnCount() > cfg.columnGuard)
        throw GuardExceeded("column count " + std::to_string(m.columnCount()) +
                            " exceeds the guard " + std::to_string(cfg.columnGuard));
    MemoCache local;
    return integrateImpl(m, cfg, cache ? *cache : local);
}

} // namespace orthint
