#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "rsar/evaluator.hpp"
#include "rsar/reduct_outcome.hpp"

namespace rsar::detail {

using Clock = std::chrono::steady_clock;

inline ReductOutcome make_outcome(DependencyEvaluator& eval, const AttributeSubset& subset, bool feasible,
                                  Clock::time_point start, std::string id, std::optional<std::uint64_t> seed) {
  ReductOutcome out;
  out.subset = subset;
  out.ratio = eval(subset);
  out.gamma = out.ratio.value();
  out.cardinality = subset.size();
  out.evaluations = eval.evaluations();
  out.elapsed = Clock::now() - start;
  out.algorithm_id = std::move(id);
  out.seed = seed;
  out.feasible = feasible;
  return out;
}

}  // namespace rsar::detail
