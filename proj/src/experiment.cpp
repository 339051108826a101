#include "rsar/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rsar/errors.hpp"

namespace rsar {

using json = nlohmann::json;

AlgorithmId parse_algorithm_id(const std::string& text) {
  if (text == "quickreduct") return AlgorithmId::quickreduct;
  if (text == "ebr") return AlgorithmId::ebr;
  if (text == "oracle") return AlgorithmId::oracle;
  if (text == "genrsar") return AlgorithmId::genrsar;
  if (text == "antrsar") return AlgorithmId::antrsar;
  if (text == "psorsar") return AlgorithmId::psorsar;
  if (text == "beersar") return AlgorithmId::beersar;
  throw ConfigError("unknown algorithm_id '" + text +
                    "' (expected quickreduct, ebr, oracle, genrsar, antrsar, psorsar or beersar)");
}

std::string to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::quickreduct:
      return "quickreduct";
    case AlgorithmId::ebr:
      return "ebr";
    case AlgorithmId::oracle:
      return "oracle";
    case AlgorithmId::genrsar:
      return "genrsar";
    case AlgorithmId::antrsar:
      return "antrsar";
    case AlgorithmId::psorsar:
      return "psorsar";
    case AlgorithmId::beersar:
      return "beersar";
  }
  return "unknown";
}

bool is_stochastic(AlgorithmId id) {
  return id == AlgorithmId::genrsar || id == AlgorithmId::antrsar || id == AlgorithmId::psorsar ||
         id == AlgorithmId::beersar;
}

AlgorithmSpec AlgorithmSpec::defaults(AlgorithmId id) {
  AlgorithmSpec spec;
  spec.id = id;
  spec.runs = is_stochastic(id) ? BeeConfig{}.runs : 1;
  return spec;
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "table") return ReportFormat::table;
  if (text == "machine") return ReportFormat::machine;
  throw ConfigError("unknown report format '" + text + "' (expected table or machine)");
}

void ExperimentConfig::validate() const {
  if (datasets.empty()) throw ConfigError("experiment needs at least one dataset");
  if (algorithms.empty()) throw ConfigError("experiment needs at least one algorithm");
  for (const auto& d : datasets) {
    if (d.name.empty()) throw ConfigError("dataset without a name");
    d.discretization.validate();
  }
  for (const auto& a : algorithms) {
    if (a.runs < 1) throw ConfigError(to_string(a.id) + ": runs must be at least 1");
    switch (a.id) {
      case AlgorithmId::genrsar:
        a.ga.validate();
        break;
      case AlgorithmId::antrsar:
        a.ant.validate();
        break;
      case AlgorithmId::psorsar:
        a.pso.validate();
        break;
      case AlgorithmId::beersar: {
        // Dimension-dependent fields are checked once the table is known.
        BeeConfig probe = a.bee;
        if (probe.dimension == 0) probe.dimension = 1;
        if (probe.upper_bound == 0.0) probe.upper_bound = probe.lower_bound + 1.0;
        probe.runs = a.runs;
        probe.validate();
        break;
      }
      default:
        break;
    }
  }
}

namespace {

// Reads the keys of obj, rejecting any not listed in allowed.
void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
void read(const json& obj, const char* key, T& target, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

DiscretizationSpec parse_discretization(const json& obj, const std::string& where) {
  check_keys(obj, {"strategy", "bins", "integer_categorical_max_distinct", "overrides"}, where);
  DiscretizationSpec spec;
  std::string strategy = to_string(spec.strategy);
  read(obj, "strategy", strategy, where);
  spec.strategy = parse_strategy(strategy);
  read(obj, "bins", spec.bins, where);
  read(obj, "integer_categorical_max_distinct", spec.integer_categorical_max_distinct, where);
  if (obj.contains("overrides")) {
    const auto& ov = obj.at("overrides");
    if (!ov.is_object()) throw ConfigError(where + ".overrides must be an object");
    for (const auto& [column, col_obj] : ov.items()) {
      const std::string col_where = where + ".overrides." + column;
      check_keys(col_obj, {"strategy", "bins"}, col_where);
      ColumnDiscretization col;
      col.bins = spec.bins;
      std::string s = to_string(spec.strategy);
      read(col_obj, "strategy", s, col_where);
      col.strategy = parse_strategy(s);
      read(col_obj, "bins", col.bins, col_where);
      spec.overrides.emplace(column, col);
    }
  }
  return spec;
}

DatasetSpec parse_dataset(const json& obj, const std::filesystem::path& base_dir, std::size_t index) {
  const std::string where = "datasets[" + std::to_string(index) + "]";
  check_keys(obj,
             {"name", "path", "delimiter", "has_header", "missing_marker", "decision_column", "missing_policy",
              "discretization"},
             where);
  DatasetSpec spec;
  read(obj, "name", spec.name, where);
  std::string path;
  read(obj, "path", path, where);
  if (path.empty()) throw ConfigError(where + ": path is required");
  spec.path = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : base_dir / path;
  std::string delimiter = ",";
  read(obj, "delimiter", delimiter, where);
  if (delimiter == "\\t" || delimiter == "tab") delimiter = "\t";
  if (delimiter.size() != 1) throw ConfigError(where + ".delimiter must be a single character");
  spec.load.delimiter = delimiter.front();
  read(obj, "has_header", spec.load.has_header, where);
  read(obj, "missing_marker", spec.load.missing_marker, where);
  if (obj.contains("decision_column")) {
    long long col = -1;
    read(obj, "decision_column", col, where);
    if (col >= 0) spec.load.decision_column = static_cast<std::size_t>(col);
  }
  std::string policy = "drop_rows";
  read(obj, "missing_policy", policy, where);
  spec.missing_policy = parse_missing_policy(policy);
  if (obj.contains("discretization")) spec.discretization = parse_discretization(obj.at("discretization"), where + ".discretization");
  return spec;
}

AlgorithmSpec parse_algorithm(const json& obj, std::size_t index, std::size_t oracle_cap) {
  const std::string where = "algorithms[" + std::to_string(index) + "]";
  check_keys(obj, {"algorithm_id", "runs", "base_seed", "params"}, where);
  std::string id;
  read(obj, "algorithm_id", id, where);
  AlgorithmSpec spec = AlgorithmSpec::defaults(parse_algorithm_id(id));
  spec.oracle_cap = oracle_cap;
  read(obj, "runs", spec.runs, where);
  read(obj, "base_seed", spec.base_seed, where);
  const json params = obj.contains("params") ? obj.at("params") : json::object();
  const std::string pw = where + ".params";
  switch (spec.id) {
    case AlgorithmId::quickreduct:
    case AlgorithmId::ebr:
      check_keys(params, {}, pw);
      break;
    case AlgorithmId::oracle:
      check_keys(params, {"max_attrs_cap"}, pw);
      read(params, "max_attrs_cap", spec.oracle_cap, pw);
      break;
    case AlgorithmId::genrsar:
      check_keys(params, {"population_size", "crossover_prob", "mutation_prob", "generations"}, pw);
      read(params, "population_size", spec.ga.population_size, pw);
      read(params, "crossover_prob", spec.ga.crossover_prob, pw);
      read(params, "mutation_prob", spec.ga.mutation_prob, pw);
      read(params, "generations", spec.ga.generations, pw);
      break;
    case AlgorithmId::antrsar:
      check_keys(params, {"num_ants", "alpha", "beta", "evaporation_rho", "iterations"}, pw);
      read(params, "num_ants", spec.ant.num_ants, pw);
      read(params, "alpha", spec.ant.alpha, pw);
      read(params, "beta", spec.ant.beta, pw);
      read(params, "evaporation_rho", spec.ant.evaporation_rho, pw);
      read(params, "iterations", spec.ant.iterations, pw);
      break;
    case AlgorithmId::psorsar:
      check_keys(params, {"swarm_size", "phi1", "phi2", "w_start", "w_end", "v_max", "iterations"}, pw);
      read(params, "swarm_size", spec.pso.swarm_size, pw);
      read(params, "phi1", spec.pso.phi1, pw);
      read(params, "phi2", spec.pso.phi2, pw);
      read(params, "w_start", spec.pso.w_start, pw);
      read(params, "w_end", spec.pso.w_end, pw);
      read(params, "v_max", spec.pso.v_max, pw);
      read(params, "iterations", spec.pso.iterations, pw);
      break;
    case AlgorithmId::beersar:
      check_keys(params, {"colony_size", "max_cycles", "abandonment_limit", "lower_bound", "upper_bound"}, pw);
      read(params, "colony_size", spec.bee.colony_size, pw);
      read(params, "max_cycles", spec.bee.max_cycles, pw);
      read(params, "abandonment_limit", spec.bee.abandonment_limit, pw);
      read(params, "lower_bound", spec.bee.lower_bound, pw);
      read(params, "upper_bound", spec.bee.upper_bound, pw);
      break;
  }
  spec.bee.runs = spec.runs;
  return spec;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, {"datasets", "algorithms", "output", "oracle_cap"}, "config");
  ExperimentConfig cfg;
  read(doc, "oracle_cap", cfg.oracle_cap, "config");
  if (doc.contains("datasets")) {
    if (!doc.at("datasets").is_array()) throw ConfigError("config.datasets must be an array");
    std::size_t i = 0;
    for (const auto& d : doc.at("datasets")) cfg.datasets.push_back(parse_dataset(d, base_dir, i++));
  }
  if (doc.contains("algorithms")) {
    if (!doc.at("algorithms").is_array()) throw ConfigError("config.algorithms must be an array");
    std::size_t i = 0;
    for (const auto& a : doc.at("algorithms")) cfg.algorithms.push_back(parse_algorithm(a, i++, cfg.oracle_cap));
  }
  if (doc.contains("output")) {
    const auto& out = doc.at("output");
    check_keys(out, {"report_path", "format"}, "config.output");
    std::string path;
    read(out, "report_path", path, "config.output");
    if (!path.empty()) cfg.output.report_path = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : base_dir / path;
    std::string format = "table";
    read(out, "format", format, "config.output");
    cfg.output.format = parse_report_format(format);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str(), path.parent_path());
}

void override_seed(ExperimentConfig& cfg, std::uint64_t seed) {
  for (auto& a : cfg.algorithms) a.base_seed = seed;
}

PreparedDataset prepare_dataset(const DatasetSpec& spec) {
  RawDataset raw = load_delimited(spec.path, spec.load);
  MissingPolicyResult cleaned = apply_missing_policy(std::move(raw), spec.missing_policy);
  PreparedDataset out;
  out.dropped_rows = cleaned.dropped_rows;
  out.encoded = encode_dataset(cleaned.data, spec.discretization);
  return out;
}

namespace {

ReductOutcome run_once(const DecisionTable& table, const AlgorithmSpec& spec, std::uint64_t seed) {
  switch (spec.id) {
    case AlgorithmId::quickreduct:
      return quick_reduct(table);
    case AlgorithmId::ebr:
      return ebr(table);
    case AlgorithmId::oracle:
      return exhaustive_min_reduct(table, spec.oracle_cap);
    case AlgorithmId::genrsar:
      return gen_rsar(table, spec.ga, seed);
    case AlgorithmId::antrsar:
      return ant_rsar(table, spec.ant, seed);
    case AlgorithmId::psorsar:
      return pso_rsar(table, spec.pso, seed);
    case AlgorithmId::beersar: {
      BeeConfig cfg = BeeConfig::defaults_for(table);
      cfg.colony_size = spec.bee.colony_size;
      cfg.max_cycles = spec.bee.max_cycles;
      cfg.lower_bound = spec.bee.lower_bound;
      if (spec.bee.upper_bound != 0.0) cfg.upper_bound = spec.bee.upper_bound;
      cfg.abandonment_limit =
          spec.bee.abandonment_limit != 0 ? spec.bee.abandonment_limit : cfg.num_sources() * cfg.dimension;
      cfg.runs = spec.runs;
      return bee_rsar(table, cfg, seed);
    }
  }
  throw ConfigError("unhandled algorithm");
}

}  // namespace

std::vector<ReductOutcome> run_algorithm(const DecisionTable& table, const AlgorithmSpec& spec) {
  std::vector<ReductOutcome> out;
  out.reserve(spec.runs);
  if (!is_stochastic(spec.id)) {
    for (std::size_t r = 0; r < spec.runs; ++r) out.push_back(run_once(table, spec, 0));
    return out;
  }
  // Runs own their RNG and state, so they execute concurrently.
  std::vector<std::future<ReductOutcome>> pending;
  pending.reserve(spec.runs);
  for (std::size_t r = 0; r < spec.runs; ++r) {
    pending.push_back(std::async(std::launch::async, [&table, &spec, s = spec.base_seed + r] {
      return run_once(table, spec, s);
    }));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

ReportRow summarize(const std::string& dataset_name, const DecisionTable& table, AlgorithmId id,
                    std::vector<ReductOutcome> runs) {
  ReportRow row;
  row.dataset_name = dataset_name;
  row.algorithm_id = to_string(id);
  row.num_features = table.num_condition_attrs();
  const DependencyRatio full = dependency_ratio(table, table.all_attributes());

  const ReductOutcome* best = nullptr;
  for (const auto& run : runs) {
    row.cardinalities.push_back(run.cardinality);
    row.total_evaluations += run.evaluations;
    row.total_elapsed += run.elapsed;
    const bool valid = run.feasible && dependency_ratio(table, run.subset) == full;
    if (valid) ++row.feasible_runs;
    const bool best_valid =
        best != nullptr && best->feasible && dependency_ratio(table, best->subset) == full;
    if (best == nullptr || (valid && !best_valid) || (valid == best_valid && run.cardinality < best->cardinality)) {
      best = &run;
    }
  }
  row.cardinality_display = cardinality_display(row.cardinalities);
  if (best != nullptr) {
    row.best_subset = best->subset;
    row.gamma_best_ratio = dependency_ratio(table, row.best_subset);
    row.gamma_best = row.gamma_best_ratio.value();
  }
  row.runs = std::move(runs);
  return row;
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ReportRow> rows;
  for (const auto& ds : cfg.datasets) {
    std::optional<PreparedDataset> prepared;
    std::string load_error;
    try {
      prepared = prepare_dataset(ds);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (const auto& algo : cfg.algorithms) {
      if (!prepared) {
        ReportRow row;
        row.dataset_name = ds.name;
        row.algorithm_id = to_string(algo.id);
        row.error = "dataset load failed: " + load_error;
        rows.push_back(std::move(row));
        continue;
      }
      const DecisionTable& table = prepared->encoded.table;
      try {
        rows.push_back(summarize(ds.name, table, algo.id, run_algorithm(table, algo)));
      } catch (const std::exception& e) {
        ReportRow row;
        row.dataset_name = ds.name;
        row.algorithm_id = to_string(algo.id);
        row.num_features = table.num_condition_attrs();
        row.error = e.what();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

bool VerificationReport::any_invalid() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.invalid_runs > 0; });
}

VerificationReport verify_against_oracle(const ExperimentConfig& cfg) {
  cfg.validate();
  VerificationReport report;
  for (const auto& ds : cfg.datasets) {
    DatasetVerification dv;
    dv.name = ds.name;
    std::optional<PreparedDataset> prepared;
    try {
      prepared = prepare_dataset(ds);
    } catch (const std::exception& e) {
      dv.notice = std::string("dataset load failed: ") + e.what();
    }
    if (prepared) {
      const DecisionTable& table = prepared->encoded.table;
      dv.num_features = table.num_condition_attrs();
      if (dv.num_features > cfg.oracle_cap) {
        dv.notice = "skipped: " + std::to_string(dv.num_features) + " attributes exceed the oracle cap of " +
                    std::to_string(cfg.oracle_cap);
      } else {
        dv.oracle_subset = exhaustive_min_reduct(table, cfg.oracle_cap).subset;
      }
    }
    report.datasets.push_back(dv);
    if (!prepared || !dv.oracle_subset) continue;

    const DecisionTable& table = prepared->encoded.table;
    const DependencyRatio full = dependency_ratio(table, table.all_attributes());
    for (const auto& algo : cfg.algorithms) {
      VerificationEntry entry;
      entry.oracle_cardinality = dv.oracle_subset->size();
      try {
        entry.row = summarize(ds.name, table, algo.id, run_algorithm(table, algo));
      } catch (const std::exception& e) {
        entry.row.dataset_name = ds.name;
        entry.row.algorithm_id = to_string(algo.id);
        entry.row.error = e.what();
      }
      for (const auto& run : entry.row.runs) {
        const long long gap = static_cast<long long>(run.cardinality) - static_cast<long long>(*entry.oracle_cardinality);
        entry.min_gap = entry.min_gap ? std::min(*entry.min_gap, gap) : gap;
        entry.max_gap = entry.max_gap ? std::max(*entry.max_gap, gap) : gap;
        if (dependency_ratio(table, run.subset) != full) ++entry.invalid_runs;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace rsar
