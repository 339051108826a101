#include "rsar/deterministic_reducers.hpp"

#include <cmath>
#include <numeric>

#include "rsar/errors.hpp"

namespace rsar {

namespace {

using Clock = std::chrono::steady_clock;

ReductOutcome finish(AttributeSubset subset, DependencyRatio ratio, std::size_t evaluations, Clock::time_point start,
                     const char* id) {
  ReductOutcome out;
  out.cardinality = subset.size();
  out.subset = std::move(subset);
  out.ratio = ratio;
  out.gamma = ratio.value();
  out.evaluations = evaluations;
  out.elapsed = Clock::now() - start;
  out.algorithm_id = id;
  return out;
}

// gamma_{}(D) in closed form: the single block is pure iff the decision is
// constant.
DependencyRatio empty_set_dependency(const DecisionTable& table) {
  return {table.decision_cardinality() <= 1 ? table.num_objects() : 0, table.num_objects()};
}

}  // namespace

ReductOutcome quick_reduct(const DecisionTable& table) {
  const auto start = Clock::now();
  const std::size_t n = table.num_condition_attrs();
  const AttributeSubset all = table.all_attributes();
  const DependencyRatio full = dependency_ratio(table, all);
  std::size_t evaluations = 1;

  AttributeSubset reduct;
  DependencyRatio current = empty_set_dependency(table);
  std::vector<double> trace{current.value()};
  while (current != full) {
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < n; ++x) {
      if (!reduct.contains(x)) candidates.push_back(x);
    }
    // Adding the last remaining attribute yields C itself.
    if (candidates.size() == 1) {
      reduct.insert(candidates.front());
      current = full;
      trace.push_back(current.value());
      break;
    }

    std::size_t best = candidates.front();
    DependencyRatio best_ratio{0, 1};
    bool have_best = false;
    for (std::size_t x : candidates) {
      const DependencyRatio r = dependency_ratio(table, reduct.with(x));
      ++evaluations;
      if (!have_best || r > best_ratio) {
        best = x;
        best_ratio = r;
        have_best = true;
      }
      if (best_ratio == full) break;  // nothing later can beat it strictly
    }
    reduct.insert(best);
    current = best_ratio;
    trace.push_back(current.value());
  }
  auto out = finish(std::move(reduct), current, evaluations, start, "quickreduct");
  out.trace = std::move(trace);
  return out;
}

ReductOutcome ebr(const DecisionTable& table) {
  const auto start = Clock::now();
  const std::size_t n = table.num_condition_attrs();
  const double target = entropy(table, table.all_attributes());
  AttributeSubset reduct;
  double current = entropy(table, reduct);
  std::size_t evaluations = 2;
  std::vector<double> trace{current};

  while (std::abs(current - target) > kEntropyTolerance) {
    std::size_t best = n;
    double best_entropy = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (reduct.contains(x)) continue;
      const double e = entropy(table, reduct.with(x));
      ++evaluations;
      if (best == n || e < best_entropy) {
        best = x;
        best_entropy = e;
      }
    }
    if (best == n) break;  // R == C; cannot happen unless entropy misbehaves
    reduct.insert(best);
    current = best_entropy;
    trace.push_back(current);
  }
  const DependencyRatio ratio = dependency_ratio(table, reduct);
  ++evaluations;
  auto out = finish(std::move(reduct), ratio, evaluations, start, "ebr");
  out.trace = std::move(trace);
  return out;
}

ReductOutcome exhaustive_min_reduct(const DecisionTable& table, std::size_t max_attrs_cap) {
  const auto start = Clock::now();
  const std::size_t n = table.num_condition_attrs();
  if (n > max_attrs_cap) {
    throw SizeLimitError("exhaustive search refused: " + std::to_string(n) + " attributes exceed the cap of " +
                         std::to_string(max_attrs_cap));
  }
  const DependencyRatio full = dependency_ratio(table, table.all_attributes());
  std::size_t evaluations = 1;

  // Sizes are visited in increasing order, so once a reduct of size k is
  // found every larger candidate is pruned by returning.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      AttributeSubset candidate(combo);
      const DependencyRatio r = k == 0 ? empty_set_dependency(table) : dependency_ratio(table, candidate);
      if (k != 0) ++evaluations;
      if (r == full) return finish(std::move(candidate), r, evaluations, start, "oracle");

      // Next k-combination of {0..n-1} in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  // Unreachable: C itself always satisfies gamma == gamma_C.
  return finish(table.all_attributes(), full, evaluations, start, "oracle");
}

}  // namespace rsar
