#pragma once

// BeeRSAR: artificial bee colony search for minimal reducts.
//
// Each food source is a vector of N reals in [lower_bound, upper_bound]
// (N = |C|). Truncating every component to an integer in [1, N] and keeping
// the distinct values yields a 1-based attribute subset, so a source always
// encodes a non-empty subset of at most N attributes.
//
// A cycle runs three phases over colony_size / 2 sources:
//   employed  - every source tries one neighbour (single-dimension move
//               towards/away from a random partner) and keeps the better;
//   onlooker  - colony_size / 2 roulette draws, weighted by source quality,
//               each trying one neighbour of the drawn source;
//   scout     - sources not improved for more than abandonment_limit cycles
//               are re-drawn uniformly inside the bounds.
// The best source seen is memorised throughout.
//
// Source quality is bee_objective(): gamma while the subset is not a reduct,
// gamma_C plus a parsimony bonus (|C| - |R|) / |C| once it is. Sources are
// compared on that value directly (larger wins). The roulette weight of a
// source is abc_fitness(max_objective - objective), i.e. the classic
// 1 / (1 + f) transform applied to the source's distance from the best
// achievable objective, so better sources draw more onlookers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rsar/reduct_outcome.hpp"
#include "rsar/rough_core.hpp"

namespace rsar {

struct BeeConfig {
  std::size_t colony_size = 10;  // employed + onlooker bees; must be even
  std::size_t dimension = 0;     // must equal |C|
  double lower_bound = 1.0;
  double upper_bound = 0.0;      // N
  std::size_t max_cycles = 1000;
  std::size_t runs = 3;
  std::size_t abandonment_limit = 0;

  // Colony defaults for a table: dimension = upper_bound = |C|,
  // abandonment_limit = (colony_size / 2) * |C|.
  static BeeConfig defaults_for(const DecisionTable& table);

  std::size_t num_sources() const { return colony_size / 2; }
  void validate() const;  // throws ConfigError
};

struct FoodSource {
  std::vector<double> position;
  double objective = 0.0;
  double fitness = 0.0;  // roulette weight
  std::size_t trial_count = 0;
  AttributeSubset decoded;
};

struct ColonyState {
  std::vector<FoodSource> sources;
  FoodSource best_so_far;
  std::size_t cycle = 0;
};

// Truncates each component toward zero, clamps it to [1, n], removes
// duplicates and shifts to 0-based indices. Throws ConfigError on an empty
// position or n == 0.
AttributeSubset decode_position(std::span<const double> position, std::size_t n);

// Copy of source with dimension j replaced by
//   x_j + phi (x_j - partner_j)
// clamped to [lower_bound, upper_bound].
std::vector<double> neighbor_source(std::span<const double> source, std::span<const double> partner, std::size_t j,
                                    double phi, double lower_bound, double upper_bound);

// 1 / (1 + f) for f >= 0, 1 + |f| otherwise.
double abc_fitness(double objective);

// fit_i / sum fit; uniform when all weights are zero.
std::vector<double> selection_probabilities(std::span<const double> fitnesses);

// lower + (upper - lower) * draw_j per dimension. Throws ConfigError when
// draws.size() != cfg.dimension.
std::vector<double> scout_reinit(const BeeConfig& cfg, std::span<const double> draws);

// Quality of a non-empty subset; see the header comment. Throws ConfigError
// on an empty subset.
double bee_objective(const DecisionTable& table, const AttributeSubset& subset);

// The largest value bee_objective can take on this table: gamma_C + (|C| - 1) / |C|.
double bee_max_objective(const DecisionTable& table);

enum class BeePhase { init, employed, onlooker, scout };

// Called with the colony state after initialisation and after each phase of
// every cycle. Meant for tests and tracing; it must not keep references.
using BeeObserver = std::function<void(BeePhase, const ColonyState&)>;

// One colony run. trace: best-so-far objective after initialisation and
// after every cycle.
ReductOutcome bee_rsar(const DecisionTable& table, const BeeConfig& cfg, std::uint64_t seed,
                       const BeeObserver& observer = {});

// cfg.runs independent runs with seeds seed, seed + 1, ..., executed
// concurrently; results are in run order.
std::vector<ReductOutcome> bee_rsar_runs(const DecisionTable& table, const BeeConfig& cfg, std::uint64_t seed);

}  // namespace rsar
