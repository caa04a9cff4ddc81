#ifndef ORTHINT_POCHHAMMER_HPP
#define ORTHINT_POCHHAMMER_HPP

#include "orthint/rational_function.hpp"

namespace orthint {

/// ((N+offset)/2)_j = 2^-j * prod_{t=0}^{j-1} (N + offset + 2t).
RationalFunctionN pochShiftedN(int offset, int j);

/// (N+offset)_j = prod_{t=0}^{j-1} (N + offset + t).
RationalFunctionN pochIntegerN(int offset, int j);

} // namespace orthint

#endif
