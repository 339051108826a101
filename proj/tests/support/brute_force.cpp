#include "support/brute_force.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace oracle {

bool same_on(const rsar::DecisionTable& t, std::size_t x, std::size_t y, Mask attrs) {
  for (std::size_t a = 0; a < t.num_condition_attrs(); ++a) {
    if ((attrs >> a & 1u) && t.value(x, a) != t.value(y, a)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> partition(const rsar::DecisionTable& t, Mask attrs) {
  const std::size_t n = t.num_objects();
  std::vector<bool> taken(n, false);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t x = 0; x < n; ++x) {
    if (taken[x]) continue;
    std::vector<std::size_t> block;
    for (std::size_t y = x; y < n; ++y) {
      if (!taken[y] && same_on(t, x, y, attrs)) {
        taken[y] = true;
        block.push_back(y);
      }
    }
    blocks.push_back(block);
  }
  return blocks;
}

std::size_t positive_count(const rsar::DecisionTable& t, Mask attrs) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < t.num_objects(); ++x) {
    bool pure = true;
    for (std::size_t y = 0; y < t.num_objects() && pure; ++y) {
      if (same_on(t, x, y, attrs) && t.decision(x) != t.decision(y)) pure = false;
    }
    if (pure) ++count;
  }
  return count;
}

double entropy(const rsar::DecisionTable& t, Mask attrs) {
  const double n = static_cast<double>(t.num_objects());
  double e = 0.0;
  for (const auto& block : partition(t, attrs)) {
    std::map<rsar::Code, std::size_t> counts;
    for (std::size_t x : block) ++counts[t.decision(x)];
    const double pb = static_cast<double>(block.size()) / n;
    for (const auto& [code, c] : counts) {
      const double q = static_cast<double>(c) / static_cast<double>(block.size());
      e -= pb * q * std::log2(q);
    }
  }
  return e;
}

Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

rsar::AttributeSubset to_subset(Mask m) {
  std::vector<std::size_t> idx;
  for (std::size_t a = 0; a < 32; ++a)
    if (m >> a & 1u) idx.push_back(a);
  return rsar::AttributeSubset(idx);
}

Mask to_mask(const rsar::AttributeSubset& s) {
  Mask m = 0;
  for (std::size_t a : s) m |= Mask{1} << a;
  return m;
}

bool is_reduct(const rsar::DecisionTable& t, Mask attrs) {
  return positive_count(t, attrs) == positive_count(t, full_mask(t.num_condition_attrs()));
}

std::size_t min_reduct_size(const rsar::DecisionTable& t) {
  const std::size_t n = t.num_condition_attrs();
  const std::size_t target = positive_count(t, full_mask(n));
  std::size_t best = n;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    if (size < best && positive_count(t, m) == target) best = size;
    if (m == full_mask(n)) break;
  }
  return best;
}

double max_bee_objective(const rsar::DecisionTable& t) {
  const std::size_t n = t.num_condition_attrs();
  const double u = static_cast<double>(t.num_objects());
  const std::size_t target = positive_count(t, full_mask(n));
  double best = -1.0;
  for (Mask m = 1; m <= full_mask(n); ++m) {
    const std::size_t pos = positive_count(t, m);
    double f = static_cast<double>(pos) / u;
    if (pos == target) {
      f = static_cast<double>(target) / u +
          static_cast<double>(n - static_cast<std::size_t>(std::popcount(m))) / static_cast<double>(n);
    }
    best = std::max(best, f);
    if (m == full_mask(n)) break;
  }
  return best;
}

}  // namespace oracle
