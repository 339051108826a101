#include "rsar/evaluator.hpp"

namespace rsar {

DependencyEvaluator::DependencyEvaluator(const DecisionTable& table)
    : table_(&table), full_(dependency_ratio(table, table.all_attributes())), evaluations_(1) {}

std::size_t DependencyEvaluator::KeyHash::operator()(const Key& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t word : key) {
    h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

DependencyEvaluator::Key DependencyEvaluator::key_of(const AttributeSubset& attrs) const {
  Key key((num_attrs() + 63) / 64, 0);
  for (std::size_t i : attrs) key[i / 64] |= 1ULL << (i % 64);
  return key;
}

DependencyRatio DependencyEvaluator::operator()(const AttributeSubset& attrs) {
  table_->check_subset(attrs);
  auto key = key_of(attrs);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const DependencyRatio ratio = dependency_ratio(*table_, attrs);
  ++evaluations_;
  cache_.emplace(std::move(key), ratio);
  return ratio;
}

}  // namespace rsar
