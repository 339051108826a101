#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "rsar/rough_core.hpp"

namespace gen {

// a=[0,0,1,1], b=[0,1,0,1]; d=[0,0,1,1] (T0) or d=[0,1,1,1] (T1).
rsar::DecisionTable t0();
rsar::DecisionTable t1();

struct Shape {
  std::size_t min_objects = 4, max_objects = 10;
  std::size_t min_attrs = 3, max_attrs = 8;
  std::size_t min_classes = 2, max_classes = 3;
  std::size_t arity = 3;
};

// Random codes, densified per column. Possibly inconsistent.
rsar::DecisionTable random_table(std::mt19937_64& rng, const Shape& shape = {});

// Decision is a function of the full condition vector, so gamma_C = 1.
rsar::DecisionTable consistent_table(std::mt19937_64& rng, std::size_t objects, std::size_t attrs,
                                     std::size_t arity, std::size_t classes);

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

}  // namespace gen
