#include <cmath>

#include "doctest.h"
#include "rsar/deterministic_reducers.hpp"
#include "rsar/errors.hpp"
#include "support/brute_force.hpp"
#include "support/table_gen.hpp"

using namespace rsar;

TEST_CASE("quickreduct on the micro tables") {
  auto out = quick_reduct(gen::t0());
  CHECK(out.subset == AttributeSubset{0});
  CHECK(out.gamma == 1.0);
  CHECK(out.cardinality == 1);
  CHECK(out.algorithm_id == "quickreduct");
  CHECK_FALSE(out.seed.has_value());

  out = quick_reduct(gen::t1());
  CHECK(out.subset == AttributeSubset{0, 1});
  CHECK(out.gamma == 1.0);
}

TEST_CASE("quickreduct picks an attribute that copies the decision") {
  const DecisionTable t({{1, 0, 2}, {0, 1, 2}, {1, 1, 0}, {0, 0, 1}}, {1, 0, 1, 0});
  CHECK(quick_reduct(t).subset == AttributeSubset{0});
}

TEST_CASE("quickreduct terminates when no single attribute helps") {
  // d = a xor b: every singleton has gamma 0.
  const DecisionTable t({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {0, 1, 1, 0});
  const auto out = quick_reduct(t);
  CHECK(out.subset == AttributeSubset{0, 1});
  CHECK(out.gamma == 1.0);
}

TEST_CASE("ebr on the micro tables") {
  auto out = ebr(gen::t0());
  CHECK(out.subset == AttributeSubset{0});
  CHECK(std::abs(out.trace.back()) <= kEntropyTolerance);

  out = ebr(gen::t1());
  CHECK(out.subset == AttributeSubset{0, 1});
  CHECK(out.gamma == 1.0);

  const DecisionTable constant({{0, 1}, {1, 0}, {1, 1}}, {0, 0, 0});
  out = ebr(constant);
  CHECK(out.subset.empty());
  CHECK(std::abs(out.trace.back()) <= kEntropyTolerance);
}

TEST_CASE("exhaustive oracle") {
  auto out = exhaustive_min_reduct(gen::t1());
  CHECK(out.subset == AttributeSubset{0, 1});
  CHECK(out.cardinality == 2);
  out = exhaustive_min_reduct(gen::t0());
  CHECK(out.subset == AttributeSubset{0});
  const DecisionTable constant({{0, 1}, {1, 0}}, {0, 0});
  out = exhaustive_min_reduct(constant);
  CHECK(out.subset.empty());
  CHECK(out.gamma == 1.0);
}

TEST_CASE("exhaustive oracle refuses tables over the cap") {
  std::mt19937_64 rng(3);
  const auto t = gen::consistent_table(rng, 12, 6, 2, 2);
  CHECK_THROWS_AS(exhaustive_min_reduct(t, 5), SizeLimitError);
  CHECK_NOTHROW(exhaustive_min_reduct(t, 6));
}

TEST_CASE("inconsistent tables stop at gamma_C") {
  // Objects 0 and 1 are identical but disagree on the decision.
  const DecisionTable t({{0, 0}, {0, 0}, {1, 0}, {1, 1}}, {0, 1, 1, 0});
  const auto full = dependency_ratio(t, t.all_attributes());
  CHECK(full == DependencyRatio{2, 4});
  CHECK(quick_reduct(t).ratio == full);
  CHECK(ebr(t).ratio == full);
  CHECK(exhaustive_min_reduct(t).ratio == full);
}

TEST_CASE("deterministic reducers agree with the brute-force oracle on random tables") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const auto t = gen::random_table(rng);
    const auto q = quick_reduct(t);
    const auto e = ebr(t);
    const auto o = exhaustive_min_reduct(t);
    CHECK(oracle::is_reduct(t, oracle::to_mask(q.subset)));
    CHECK(oracle::is_reduct(t, oracle::to_mask(e.subset)));
    CHECK(oracle::is_reduct(t, oracle::to_mask(o.subset)));
    CHECK(o.cardinality == oracle::min_reduct_size(t));
    CHECK(o.cardinality <= q.cardinality);
    const std::size_t n = t.num_condition_attrs();
    CHECK(q.evaluations <= (n * n + n) / 2);
  }
}
