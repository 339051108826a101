#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsar/rough_core.hpp"

namespace rsar {

// What a reduct search returns.
struct ReductOutcome {
  AttributeSubset subset;
  DependencyRatio ratio;  // exact gamma of subset
  double gamma = 0.0;
  std::size_t cardinality = 0;
  // Dependency or entropy computations actually performed.
  std::size_t evaluations = 0;
  std::chrono::duration<double> elapsed{0.0};
  std::string algorithm_id;
  std::optional<std::uint64_t> seed;  // absent for deterministic methods
  // False when a stochastic search never visited a subset with
  // gamma == gamma_C and fell back to its best-ranked infeasible subset.
  bool feasible = true;
  // Progress after initialisation and after every iteration. Scale and
  // direction are algorithm-specific and documented with each algorithm.
  std::vector<double> trace;
};

}  // namespace rsar
