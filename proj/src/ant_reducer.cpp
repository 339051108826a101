#include <cmath>

#include "outcome_util.hpp"
#include "rsar/errors.hpp"
#include "rsar/metaheuristic_reducers.hpp"
#include "rsar/random.hpp"

namespace rsar {

PheromoneGraph PheromoneGraph::uniform(std::size_t n, double alpha, double beta, double rho) {
  PheromoneGraph g;
  g.num_features = n;
  g.tau.assign(n * n, 1.0);
  g.eta.assign(n * n, 0.0);
  g.alpha = alpha;
  g.beta = beta;
  g.evaporation_rho = rho;
  return g;
}

void AntConfig::validate() const {
  if (!(evaporation_rho > 0.0 && evaporation_rho < 1.0)) throw ConfigError("ACO evaporation_rho must lie in (0, 1)");
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw ConfigError("ACO alpha and beta must be non-negative");
}

std::vector<double> ant_transition_probabilities(const PheromoneGraph& graph, const AntState& state) {
  if (state.unvisited.empty()) throw ConfigError("transition probabilities need at least one unvisited feature");
  const std::size_t i = state.current_feature;
  std::vector<double> p(state.unvisited.size());
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t j = state.unvisited[k];
    p[k] = std::pow(graph.tau_at(i, j), graph.alpha) * std::pow(graph.eta_at(i, j), graph.beta);
    total += p[k];
  }
  if (!(total > 0.0)) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(p.size()));
    return p;
  }
  for (double& v : p) v /= total;
  return p;
}

ReductOutcome ant_rsar(const DecisionTable& table, const AntConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const auto start = detail::Clock::now();
  const std::size_t n = table.num_condition_attrs();
  Rng rng(seed);
  DependencyEvaluator eval(table);
  if (n == 0) return detail::make_outcome(eval, {}, false, start, "antrsar", seed);

  PheromoneGraph graph = PheromoneGraph::uniform(n, cfg.alpha, cfg.beta, cfg.evaporation_rho);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double g = eval(AttributeSubset{i, j}).value();
      graph.eta_at(i, j) = g;
      graph.eta_at(j, i) = g;
    }
  }

  const std::size_t num_ants = cfg.num_ants == 0 ? n : cfg.num_ants;
  AttributeSubset best;
  bool have_best = false;
  std::vector<double> trace{0.0};

  for (std::size_t iter = 0; iter < cfg.iterations; ++iter) {
    AttributeSubset iter_best;
    std::vector<std::size_t> iter_path;
    DependencyRatio iter_gamma;
    bool have_iter = false;

    for (std::size_t ant = 0; ant < num_ants; ++ant) {
      AntState state;
      state.current_feature = rng.index(n);
      state.visited.insert(state.current_feature);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != state.current_feature) state.unvisited.push_back(j);
      }
      std::vector<std::size_t> path{state.current_feature};
      DependencyRatio gamma = eval(state.visited);
      while (gamma != eval.full() && !state.unvisited.empty()) {
        const auto probs = ant_transition_probabilities(graph, state);
        const std::size_t pick = rng.roulette(probs);
        const std::size_t next = state.unvisited[pick];
        state.unvisited.erase(state.unvisited.begin() + static_cast<std::ptrdiff_t>(pick));
        state.visited.insert(next);
        state.current_feature = next;
        path.push_back(next);
        gamma = eval(state.visited);
      }
      if (!have_iter || state.visited.size() < iter_best.size()) {
        iter_best = state.visited;
        iter_path = std::move(path);
        iter_gamma = gamma;
        have_iter = true;
      }
    }

    if (!have_best || iter_best.size() < best.size()) {
      best = iter_best;
      have_best = true;
    }

    for (double& t : graph.tau) t *= 1.0 - graph.evaporation_rho;
    const double deposit = iter_gamma.value() / static_cast<double>(iter_best.size());
    for (std::size_t k = 0; k + 1 < iter_path.size(); ++k) {
      graph.tau_at(iter_path[k], iter_path[k + 1]) += deposit;
      graph.tau_at(iter_path[k + 1], iter_path[k]) += deposit;
    }
    trace.push_back(static_cast<double>(n - best.size()));
  }

  // An ant always ends at gamma_C because adding every feature reaches C.
  const bool feasible = have_best && eval(best) == eval.full();
  auto out = detail::make_outcome(eval, best, feasible, start, "antrsar", seed);
  out.trace = std::move(trace);
  return out;
}

}  // namespace rsar
