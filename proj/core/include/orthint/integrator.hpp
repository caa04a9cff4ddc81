#ifndef ORTHINT_INTEGRATOR_HPP
#define ORTHINT_INTEGRATOR_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthint/power_matrix.hpp"
#include "orthint/rational_function.hpp"

namespace orthint {

struct IntegratorConfig {
    enum class Method { Auto, RecursionOnly, TwoVectorClosed, Ullah };
    Method method = Method::Auto;
    int degreeGuard = 64;
    int columnGuard = 8;
};

/// Memoization cache keyed by PowerMatrix::canonicalKey. A stored value
/// equals the from-scratch computation for its key.
class MemoCache {
  public:
    std::optional<RationalFunctionN> lookup(const std::string& key) const {
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void store(const std::string& key, const RationalFunctionN& value) {
        map_.emplace(key, value);
    }
    size_t size() const { return map_.size(); }

  private:
    std::unordered_map<std::string, RationalFunctionN> map_;
};

/// <m> over O(N): zero when any component is odd, otherwise
/// (N/2)_{mbar/2}^-1 prod_i (1/2)_{m_i/2}.
RationalFunctionN oneVectorOrthogonal(const VectorIndex& m);

/// <m:n> over U(N), monomial in real and imaginary parts of one column:
/// zero when any component of m or n is odd, otherwise
/// (N)_{(mbar+nbar)/2}^-1 prod_i (1/2)_{m_i/2} (1/2)_{n_i/2}.
RationalFunctionN oneVectorUnitary(const VectorIndex& m, const VectorIndex& n);

/// Closed form for <m,n> over O(N), a single sum over even kappa <= n.
RationalFunctionN twoVectorClosed(const VectorIndex& m, const VectorIndex& n);

/// Independent double-sum formula for <m,n> (corrected historical result);
/// cross-checks twoVectorClosed.
RationalFunctionN twoVectorUllah(const VectorIndex& m, const VectorIndex& n);

struct ReductionTerm {
    RationalFunctionN coefficient;
    PowerMatrix reduced;
};

/// Expands an R-column integral (R >= 2) into a linear combination of
/// (R-1)-column integrals. Only the coefficients depend on N.
std::vector<ReductionTerm> recursionReduce(const PowerMatrix& m);

/// <M> as an exact reduced rational function of N, valid for
/// N >= m.validityBound(). Dispatches on the column count per cfg.method
/// and memoizes by canonical key; a null cache means a fresh private cache.
RationalFunctionN integrate(const PowerMatrix& m, const IntegratorConfig& cfg = {},
                            MemoCache* cache = nullptr);

} // namespace orthint

#endif
