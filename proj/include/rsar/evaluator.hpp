#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rsar/rough_core.hpp"

namespace rsar {

// Memoising dependency oracle for one search run. Not thread-safe; every run
// owns its own instance. evaluations() counts cache misses only.
class DependencyEvaluator {
 public:
  explicit DependencyEvaluator(const DecisionTable& table);

  const DecisionTable& table() const { return *table_; }
  std::size_t num_attrs() const { return table_->num_condition_attrs(); }

  // gamma_C(D), computed once at construction (counted as an evaluation).
  const DependencyRatio& full() const { return full_; }

  DependencyRatio operator()(const AttributeSubset& attrs);

  bool is_reduct(const AttributeSubset& attrs) { return (*this)(attrs) == full_; }

  std::size_t evaluations() const { return evaluations_; }

 private:
  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& key) const;
  };

  Key key_of(const AttributeSubset& attrs) const;

  const DecisionTable* table_;
  DependencyRatio full_;
  std::size_t evaluations_ = 0;
  std::unordered_map<Key, DependencyRatio, KeyHash> cache_;
};

}  // namespace rsar
