#include "rsar/bee_reducer.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "outcome_util.hpp"
#include "rsar/errors.hpp"
#include "rsar/random.hpp"

namespace rsar {

BeeConfig BeeConfig::defaults_for(const DecisionTable& table) {
  BeeConfig cfg;
  const std::size_t n = table.num_condition_attrs();
  cfg.dimension = n;
  cfg.upper_bound = static_cast<double>(n);
  cfg.abandonment_limit = cfg.num_sources() * n;
  return cfg;
}

void BeeConfig::validate() const {
  if (colony_size < 4 || colony_size % 2 != 0) {
    throw ConfigError("bee colony_size must be even and at least 4 (two food sources), got " +
                      std::to_string(colony_size));
  }
  if (dimension == 0) throw ConfigError("bee dimension must be positive");
  if (!(lower_bound < upper_bound)) throw ConfigError("bee lower_bound must be below upper_bound");
  if (max_cycles < 1) throw ConfigError("bee max_cycles must be at least 1");
  if (runs < 1) throw ConfigError("bee runs must be at least 1");
}

AttributeSubset decode_position(std::span<const double> position, std::size_t n) {
  if (position.empty()) throw ConfigError("cannot decode an empty position");
  if (n == 0) throw ConfigError("cannot decode into zero features");
  std::vector<std::size_t> indices;
  indices.reserve(position.size());
  const double hi = static_cast<double>(n);
  for (double x : position) {
    const double feature = std::clamp(std::trunc(x), 1.0, hi);
    indices.push_back(static_cast<std::size_t>(feature) - 1);
  }
  return AttributeSubset(std::move(indices));
}

std::vector<double> neighbor_source(std::span<const double> source, std::span<const double> partner, std::size_t j,
                                    double phi, double lower_bound, double upper_bound) {
  std::vector<double> v(source.begin(), source.end());
  v.at(j) = std::clamp(source[j] + phi * (source[j] - partner[j]), lower_bound, upper_bound);
  return v;
}

double abc_fitness(double objective) { return objective >= 0.0 ? 1.0 / (1.0 + objective) : 1.0 + std::abs(objective); }

std::vector<double> selection_probabilities(std::span<const double> fitnesses) {
  std::vector<double> p(fitnesses.begin(), fitnesses.end());
  double total = 0.0;
  for (double f : p) total += f;
  if (!(total > 0.0)) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> scout_reinit(const BeeConfig& cfg, std::span<const double> draws) {
  if (draws.size() != cfg.dimension) {
    throw ConfigError("scout needs " + std::to_string(cfg.dimension) + " draws, got " + std::to_string(draws.size()));
  }
  std::vector<double> x(draws.size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = cfg.lower_bound + (cfg.upper_bound - cfg.lower_bound) * draws[j];
  return x;
}

namespace {

double objective_from(const DependencyRatio& gamma, const DependencyRatio& full, std::size_t size, std::size_t n) {
  if (gamma != full) return gamma.value();
  return full.value() + static_cast<double>(n - size) / static_cast<double>(n);
}

class Colony {
 public:
  Colony(const DecisionTable& table, const BeeConfig& cfg, std::uint64_t seed, const BeeObserver& observer)
      : observer_(observer), cfg_(cfg), n_(table.num_condition_attrs()), rng_(seed), eval_(table) {
    max_objective_ = eval_.full().value() + static_cast<double>(n_ - 1) / static_cast<double>(n_);
  }

  ReductOutcome run(std::uint64_t seed) {
    const auto start = detail::Clock::now();
    state_.sources.resize(cfg_.num_sources());
    for (auto& src : state_.sources) scout(src);
    state_.best_so_far = state_.sources.front();
    memorize();
    notify(BeePhase::init);
    std::vector<double> trace{state_.best_so_far.objective};

    std::vector<double> weights(state_.sources.size());
    for (state_.cycle = 1; state_.cycle <= cfg_.max_cycles; ++state_.cycle) {
      improved_.assign(state_.sources.size(), false);
      for (std::size_t i = 0; i < state_.sources.size(); ++i) explore(i);
      notify(BeePhase::employed);

      for (std::size_t i = 0; i < state_.sources.size(); ++i) weights[i] = state_.sources[i].fitness;
      const std::vector<double> probs = selection_probabilities(weights);
      for (std::size_t m = 0; m < state_.sources.size(); ++m) explore(rng_.roulette(probs));
      // trial_count counts whole cycles without improvement.
      for (std::size_t i = 0; i < state_.sources.size(); ++i) {
        if (!improved_[i]) ++state_.sources[i].trial_count;
      }
      notify(BeePhase::onlooker);

      for (auto& src : state_.sources) {
        if (src.trial_count > cfg_.abandonment_limit) scout(src);
      }
      memorize();
      notify(BeePhase::scout);
      trace.push_back(state_.best_so_far.objective);
    }

    const bool feasible = eval_(state_.best_so_far.decoded) == eval_.full();
    auto out = detail::make_outcome(eval_, state_.best_so_far.decoded, feasible, start, "beersar", seed);
    out.trace = std::move(trace);
    return out;
  }

 private:
  void notify(BeePhase phase) const {
    if (observer_) observer_(phase, state_);
  }

  void evaluate(FoodSource& src) {
    src.decoded = decode_position(src.position, n_);
    src.objective = objective_from(eval_(src.decoded), eval_.full(), src.decoded.size(), n_);
    src.fitness = abc_fitness(max_objective_ - src.objective);
  }

  void scout(FoodSource& src) {
    std::vector<double> draws(cfg_.dimension);
    for (double& d : draws) d = rng_.uniform_closed01();
    src.position = scout_reinit(cfg_, draws);
    src.trial_count = 0;
    evaluate(src);
  }

  // One neighbourhood move from source i with greedy replacement.
  void explore(std::size_t i) {
    const std::size_t j = rng_.index(cfg_.dimension);
    std::size_t k = rng_.index(state_.sources.size() - 1);
    if (k >= i) ++k;
    const double phi = rng_.uniform(-1.0, 1.0);

    FoodSource& src = state_.sources[i];
    FoodSource candidate;
    candidate.position =
        neighbor_source(src.position, state_.sources[k].position, j, phi, cfg_.lower_bound, cfg_.upper_bound);
    evaluate(candidate);
    if (candidate.objective > src.objective) {
      candidate.trial_count = 0;
      src = std::move(candidate);
      improved_[i] = true;
      if (src.objective > state_.best_so_far.objective) state_.best_so_far = src;
    } else if (candidate.objective == src.objective) {
      // Sideways move: many positions decode to one subset, and dropping a
      // feature held by two components takes a neutral step first.
      candidate.trial_count = src.trial_count;
      src = std::move(candidate);
    }
  }

  void memorize() {
    for (const auto& src : state_.sources) {
      if (src.objective > state_.best_so_far.objective) state_.best_so_far = src;
    }
  }

  const BeeObserver& observer_;
  const BeeConfig& cfg_;
  std::size_t n_;
  Rng rng_;
  DependencyEvaluator eval_;
  double max_objective_ = 0.0;
  ColonyState state_;
  std::vector<bool> improved_;
};

}  // namespace

double bee_objective(const DecisionTable& table, const AttributeSubset& subset) {
  if (subset.empty()) throw ConfigError("bee objective is undefined for the empty subset");
  const DependencyRatio full = dependency_ratio(table, table.all_attributes());
  return objective_from(dependency_ratio(table, subset), full, subset.size(), table.num_condition_attrs());
}

double bee_max_objective(const DecisionTable& table) {
  const std::size_t n = table.num_condition_attrs();
  return dependency(table, table.all_attributes()) + (n == 0 ? 0.0 : static_cast<double>(n - 1) / static_cast<double>(n));
}

ReductOutcome bee_rsar(const DecisionTable& table, const BeeConfig& cfg, std::uint64_t seed,
                       const BeeObserver& observer) {
  cfg.validate();
  if (cfg.dimension != table.num_condition_attrs()) {
    throw ConfigError("bee dimension " + std::to_string(cfg.dimension) + " does not match |C| = " +
                      std::to_string(table.num_condition_attrs()));
  }
  Colony colony(table, cfg, seed, observer);
  return colony.run(seed);
}

std::vector<ReductOutcome> bee_rsar_runs(const DecisionTable& table, const BeeConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  std::vector<std::future<ReductOutcome>> pending;
  pending.reserve(cfg.runs);
  for (std::size_t r = 0; r < cfg.runs; ++r) {
    pending.push_back(std::async(std::launch::async, [&table, &cfg, s = seed + r] { return bee_rsar(table, cfg, s); }));
  }
  std::vector<ReductOutcome> out;
  out.reserve(cfg.runs);
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace rsar
