#include <algorithm>

#include "outcome_util.hpp"
#include "rsar/errors.hpp"
#include "rsar/metaheuristic_reducers.hpp"
#include "rsar/random.hpp"

namespace rsar {

std::size_t BinaryChromosome::ones() const {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; }));
}

void GaConfig::validate() const {
  if (population_size < 2) throw ConfigError("GA population_size must be at least 2");
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw ConfigError("GA crossover_prob must lie in [0, 1]");
  if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0)) throw ConfigError("GA mutation_prob must lie in [0, 1]");
}

namespace {

double fitness_from(DependencyRatio gamma, std::size_t selected, std::size_t n) {
  if (n == 0 || selected == 0) return 0.0;
  return gamma.value() * static_cast<double>(n - selected) / static_cast<double>(n);
}

struct Scored {
  BinaryChromosome chrom;
  double fitness = 0.0;
};

}  // namespace

double ga_fitness(const DecisionTable& table, const BinaryChromosome& chrom) {
  if (chrom.size() != table.num_condition_attrs()) {
    throw ConfigError("chromosome length " + std::to_string(chrom.size()) + " differs from |C| = " +
                      std::to_string(table.num_condition_attrs()));
  }
  const std::size_t ones = chrom.ones();
  if (ones == 0) return 0.0;
  return fitness_from(dependency_ratio(table, chrom.decode()), ones, chrom.size());
}

ReductOutcome gen_rsar(const DecisionTable& table, const GaConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto start = detail::Clock::now();
  const std::size_t n = table.num_condition_attrs();
  Rng rng(seed);
  DependencyEvaluator eval(table);

  bool have_feasible = false;
  AttributeSubset best_feasible;
  AttributeSubset fittest;
  double fittest_value = -1.0;

  auto score = [&](BinaryChromosome chrom) {
    Scored s{std::move(chrom), 0.0};
    const AttributeSubset subset = s.chrom.decode();
    if (subset.empty()) return s;
    const DependencyRatio gamma = eval(subset);
    s.fitness = fitness_from(gamma, subset.size(), n);
    if (gamma == eval.full() && (!have_feasible || subset.size() < best_feasible.size())) {
      have_feasible = true;
      best_feasible = subset;
    }
    if (s.fitness > fittest_value) {
      fittest_value = s.fitness;
      fittest = subset;
    }
    return s;
  };

  auto best_of = [](const std::vector<Scored>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
      if (pop[i].fitness > pop[best].fitness) best = i;
    }
    return best;
  };

  std::vector<Scored> population;
  population.reserve(cfg.population_size);
  for (std::size_t i = 0; i < cfg.population_size; ++i) {
    BinaryChromosome chrom{std::vector<std::uint8_t>(n)};
    for (auto& bit : chrom.bits) bit = rng.bernoulli(0.5) ? 1 : 0;
    population.push_back(score(std::move(chrom)));
  }

  std::vector<double> trace{population[best_of(population)].fitness};
  std::vector<double> weights(cfg.population_size);

  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    std::vector<Scored> next;
    next.reserve(cfg.population_size);
    next.push_back(population[best_of(population)]);

    for (std::size_t i = 0; i < population.size(); ++i) weights[i] = population[i].fitness;
    while (next.size() < cfg.population_size) {
      BinaryChromosome a = population[rng.roulette(weights)].chrom;
      BinaryChromosome b = population[rng.roulette(weights)].chrom;
      if (n > 1 && rng.bernoulli(cfg.crossover_prob)) {
        const std::size_t cut = 1 + rng.index(n - 1);  // genes [cut, n) swap
        for (std::size_t j = cut; j < n; ++j) std::swap(a.bits[j], b.bits[j]);
      }
      for (BinaryChromosome* child : {&a, &b}) {
        if (n > 0 && rng.bernoulli(cfg.mutation_prob)) {
          auto& bit = child->bits[rng.index(n)];
          bit = bit ? 0 : 1;
        }
      }
      next.push_back(score(std::move(a)));
      if (next.size() < cfg.population_size) next.push_back(score(std::move(b)));
    }
    population = std::move(next);
    trace.push_back(population[best_of(population)].fitness);
  }

  auto out = detail::make_outcome(eval, have_feasible ? best_feasible : fittest, have_feasible, start, "genrsar", seed);
  out.trace = std::move(trace);
  return out;
}

}  // namespace rsar
