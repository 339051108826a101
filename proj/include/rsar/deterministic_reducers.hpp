#pragma once

#include <cstddef>

#include "rsar/reduct_outcome.hpp"
#include "rsar/rough_core.hpp"

namespace rsar {

// Greedy forward selection on the dependency degree. Each round adds the
// attribute giving the largest gamma_{R u {x}}, lowest index on ties, and the
// search stops once gamma_R == gamma_C (exact comparison).
//
// When no candidate strictly improves on gamma_R the best candidate is added
// anyway, otherwise the loop could not terminate on tables such as
// d = a XOR b. At most (n^2 + n) / 2 dependency evaluations are performed,
// including the one for gamma_C.
ReductOutcome quick_reduct(const DecisionTable& table);

// Greedy forward selection minimising conditional entropy; stops once
// |E(R) - E(C)| <= kEntropyTolerance. The outcome's gamma comes from one
// closing dependency computation (counted in evaluations).
ReductOutcome ebr(const DecisionTable& table);

inline constexpr std::size_t kDefaultOracleCap = 24;

// Minimal-cardinality reduct by enumeration in order of increasing size; the
// first subset with gamma == gamma_C wins, so ties go to the
// lexicographically smallest index set. Throws SizeLimitError when the table
// has more than max_attrs_cap condition attributes.
ReductOutcome exhaustive_min_reduct(const DecisionTable& table, std::size_t max_attrs_cap = kDefaultOracleCap);

}  // namespace rsar
