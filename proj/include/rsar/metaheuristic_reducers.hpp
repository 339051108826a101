#pragma once

// Stochastic reduct searches: genetic algorithm (GenRSAR), ant colony
// (AntRSAR) and binary particle swarm (PSO-RSAR). Each run owns a private
// RNG seeded from its argument, so (table, config, seed) fixes the outcome.
//
// An empty subset is never treated as feasible by these searches.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsar/reduct_outcome.hpp"
#include "rsar/rough_core.hpp"

namespace rsar {

// One gene per condition attribute; 1 selects the attribute.
struct BinaryChromosome {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  std::size_t ones() const;
  AttributeSubset decode() const { return AttributeSubset::from_mask(bits); }
  friend bool operator==(const BinaryChromosome&, const BinaryChromosome&) = default;
};

// ---------------------------------------------------------------------------
// GenRSAR

struct GaConfig {
  std::size_t population_size = 100;
  double crossover_prob = 0.6;
  // Chance that a child has one uniformly chosen bit flipped.
  double mutation_prob = 0.4;
  std::size_t generations = 100;

  void validate() const;  // throws ConfigError
};

// gamma_R(D) * (|C| - |R|) / |C|; zero for the empty and the full subset.
double ga_fitness(const DecisionTable& table, const BinaryChromosome& chrom);

// Generational GA: roulette selection on ga_fitness, single-point crossover,
// one elite carried over. Returns the smallest feasible subset encountered
// (first found on ties), else the fittest subset seen with feasible = false.
// trace: best fitness in the population per generation.
ReductOutcome gen_rsar(const DecisionTable& table, const GaConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// AntRSAR

struct PheromoneGraph {
  std::size_t num_features = 0;
  std::vector<double> tau;  // row-major num_features x num_features, > 0
  std::vector<double> eta;  // row-major num_features x num_features, >= 0
  double alpha = 1.0;
  double beta = 2.0;
  double evaporation_rho = 0.1;

  // tau = 1 everywhere, eta = 0.
  static PheromoneGraph uniform(std::size_t n, double alpha, double beta, double rho);

  double& tau_at(std::size_t i, std::size_t j) { return tau[i * num_features + j]; }
  double tau_at(std::size_t i, std::size_t j) const { return tau[i * num_features + j]; }
  double& eta_at(std::size_t i, std::size_t j) { return eta[i * num_features + j]; }
  double eta_at(std::size_t i, std::size_t j) const { return eta[i * num_features + j]; }
};

struct AntState {
  std::size_t current_feature = 0;
  AttributeSubset visited;
  std::vector<std::size_t> unvisited;
};

// Transition rule over state.unvisited, in that order:
//   p_j = tau_ij^alpha eta_ij^beta / sum_l tau_il^alpha eta_il^beta.
// Uniform when every numerator is zero. Throws ConfigError when unvisited is
// empty.
std::vector<double> ant_transition_probabilities(const PheromoneGraph& graph, const AntState& state);

struct AntConfig {
  std::size_t num_ants = 0;  // 0: one ant per condition attribute
  double alpha = 1.0;
  double beta = 2.0;
  double evaporation_rho = 0.1;
  std::size_t iterations = 50;

  void validate() const;
};

// Ants start on uniformly drawn features and extend their subsets by the
// transition rule until gamma == gamma_C. eta_ij = gamma({i, j}). After each
// iteration tau evaporates by (1 - rho) and the iteration-best path's edges
// gain gamma / |subset|. Returns the smallest subset seen.
// trace: |C| - best cardinality so far, per iteration.
ReductOutcome ant_rsar(const DecisionTable& table, const AntConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// PSO-RSAR

struct PsoConfig {
  std::size_t swarm_size = 20;
  double phi1 = 2.0;
  double phi2 = 2.0;
  double w_start = 1.0;
  double w_end = 0.1;
  double v_max = 4.0;
  std::size_t iterations = 100;

  void validate() const;
};

struct Particle {
  BinaryChromosome position;
  std::vector<double> velocity;
  BinaryChromosome best_position;
};

// 1 / (1 + e^-v).
double pso_sigmoid(double v);

// v'_j = w v_j + phi1 r1 (Bp_j - p_j) + phi2 r2 (Gp_j - p_j), clamped to
// [-v_max, v_max].
std::vector<double> pso_velocity_update(const Particle& particle, const BinaryChromosome& gbest, double w, double phi1,
                                        double phi2, double r1, double r2, double v_max = PsoConfig{}.v_max);

// bit_j = 1 iff rho_draws[j] < sigmoid(velocity[j]). Throws ConfigError on a
// length mismatch.
BinaryChromosome pso_position_update(std::span<const double> velocity, std::span<const double> rho_draws);

// Ranking of a position: feasible (POS_E(D) == POS_C(D), non-empty E) beats
// infeasible; feasible positions prefer fewer ones, infeasible ones prefer
// higher gamma then fewer ones.
struct PsoRank {
  bool feasible = false;
  DependencyRatio gamma;
  std::size_t ones = 0;

  // True when this rank is strictly better than other.
  bool better_than(const PsoRank& other) const;
  // Monotone scalar view: 1 + (|C| - ones) when feasible, gamma otherwise.
  double score(std::size_t num_attrs) const;
};

// Binary PSO with linearly decaying inertia. Personal and global bests move
// only on strict rank improvement; the global best is refreshed once per
// iteration. trace: score of the global best per iteration.
ReductOutcome pso_rsar(const DecisionTable& table, const PsoConfig& cfg, std::uint64_t seed);

}  // namespace rsar
