#pragma once

// Minor containment and the excluded-minor predicates.

#include "nsco/matroid.hpp"

namespace nsco {

class BudgetExceeded : public MatroidError {
public:
    using MatroidError::MatroidError;
};

inline constexpr long kDefaultMinorBudget = 10'000'000;

// True iff N is isomorphic to a minor of M. Enumerates independent
// contraction sets of rank r(M) - r(N), deduplicated by contraction span,
// and runs restriction embedding on each quotient. budget caps the number of
// distinct spans examined.
bool has_minor(const BinaryMatroid& m, const BinaryMatroid& n,
               long budget = kDefaultMinorBudget);

bool is_regular(const BinaryMatroid& m, long budget = kDefaultMinorBudget);
bool is_graphic(const BinaryMatroid& m, long budget = kDefaultMinorBudget);
bool is_cographic(const BinaryMatroid& m, long budget = kDefaultMinorBudget);

}  // namespace nsco
