#include <algorithm>
#include <cmath>

#include "outcome_util.hpp"
#include "rsar/errors.hpp"
#include "rsar/metaheuristic_reducers.hpp"
#include "rsar/random.hpp"

namespace rsar {

void PsoConfig::validate() const {
  if (swarm_size < 1) throw ConfigError("PSO swarm_size must be at least 1");
  if (!(w_start >= w_end && w_end >= 0.0)) throw ConfigError("PSO inertia must satisfy w_start >= w_end >= 0");
  if (!(v_max > 0.0)) throw ConfigError("PSO v_max must be positive");
}

double pso_sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

std::vector<double> pso_velocity_update(const Particle& particle, const BinaryChromosome& gbest, double w, double phi1,
                                        double phi2, double r1, double r2, double v_max) {
  const std::size_t n = particle.velocity.size();
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double p = particle.position.bits[j];
    const double cognitive = phi1 * r1 * (static_cast<double>(particle.best_position.bits[j]) - p);
    const double social = phi2 * r2 * (static_cast<double>(gbest.bits[j]) - p);
    v[j] = std::clamp(w * particle.velocity[j] + cognitive + social, -v_max, v_max);
  }
  return v;
}

BinaryChromosome pso_position_update(std::span<const double> velocity, std::span<const double> rho_draws) {
  if (velocity.size() != rho_draws.size()) {
    throw ConfigError("position update needs one draw per dimension: " + std::to_string(velocity.size()) + " vs " +
                      std::to_string(rho_draws.size()));
  }
  BinaryChromosome out{std::vector<std::uint8_t>(velocity.size())};
  for (std::size_t j = 0; j < velocity.size(); ++j) out.bits[j] = rho_draws[j] < pso_sigmoid(velocity[j]) ? 1 : 0;
  return out;
}

bool PsoRank::better_than(const PsoRank& other) const {
  if (feasible != other.feasible) return feasible;
  if (feasible) return ones < other.ones;
  if (gamma != other.gamma) return gamma > other.gamma;
  return ones < other.ones;
}

double PsoRank::score(std::size_t num_attrs) const {
  return feasible ? 1.0 + static_cast<double>(num_attrs - ones) : gamma.value();
}

ReductOutcome pso_rsar(const DecisionTable& table, const PsoConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto start = detail::Clock::now();
  const std::size_t n = table.num_condition_attrs();
  Rng rng(seed);
  DependencyEvaluator eval(table);

  // POS_E(D) is contained in POS_C(D), so equal regions means equal sizes.
  auto rank_of = [&](const BinaryChromosome& pos) {
    PsoRank r;
    r.ones = pos.ones();
    if (r.ones == 0) {
      r.gamma = {0, table.num_objects()};
      return r;
    }
    r.gamma = eval(pos.decode());
    r.feasible = r.gamma == eval.full();
    return r;
  };

  std::vector<Particle> swarm(cfg.swarm_size);
  std::vector<PsoRank> best_rank(cfg.swarm_size);
  for (std::size_t i = 0; i < cfg.swarm_size; ++i) {
    Particle& p = swarm[i];
    p.position.bits.resize(n);
    p.velocity.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      p.position.bits[j] = rng.bernoulli(0.5) ? 1 : 0;
      p.velocity[j] = rng.uniform(-cfg.v_max, cfg.v_max);
    }
    p.best_position = p.position;
    best_rank[i] = rank_of(p.position);
  }

  std::size_t leader = 0;
  for (std::size_t i = 1; i < cfg.swarm_size; ++i) {
    if (best_rank[i].better_than(best_rank[leader])) leader = i;
  }
  BinaryChromosome gbest = swarm[leader].best_position;
  PsoRank gbest_rank = best_rank[leader];
  std::vector<double> trace{gbest_rank.score(n)};

  std::vector<double> draws(n);
  for (std::size_t t = 0; t < cfg.iterations; ++t) {
    const double progress = cfg.iterations > 1 ? static_cast<double>(t) / static_cast<double>(cfg.iterations - 1) : 0.0;
    const double w = cfg.w_start - (cfg.w_start - cfg.w_end) * progress;
    for (std::size_t i = 0; i < cfg.swarm_size; ++i) {
      Particle& p = swarm[i];
      const double r1 = rng.uniform_closed01();
      const double r2 = rng.uniform_closed01();
      p.velocity = pso_velocity_update(p, gbest, w, cfg.phi1, cfg.phi2, r1, r2, cfg.v_max);
      for (double& d : draws) d = rng.uniform_closed01();
      p.position = pso_position_update(p.velocity, draws);
      const PsoRank r = rank_of(p.position);
      if (r.better_than(best_rank[i])) {
        best_rank[i] = r;
        p.best_position = p.position;
      }
    }
    for (std::size_t i = 0; i < cfg.swarm_size; ++i) {
      if (best_rank[i].better_than(gbest_rank)) {
        gbest_rank = best_rank[i];
        gbest = swarm[i].best_position;
      }
    }
    trace.push_back(gbest_rank.score(n));
  }

  auto out = detail::make_outcome(eval, gbest.decode(), gbest_rank.feasible, start, "psorsar", seed);
  out.trace = std::move(trace);
  return out;
}

}  // namespace rsar
