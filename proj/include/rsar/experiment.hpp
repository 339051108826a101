#pragma once

// Experiment harness: datasets x algorithms x seeded runs, reported in the
// "reduct sizes per dataset" layout.
//
// Configuration is a JSON document:
//
//   {
//     "datasets": [
//       { "name": "wisconsin", "path": "wisconsin.csv",
//         "delimiter": ",", "has_header": true, "missing_marker": "?",
//         "decision_column": 9,                   // default: last column
//         "missing_policy": "drop_rows",          // or "reject"
//         "discretization": { "strategy": "equal_frequency", "bins": 3,
//                             "integer_categorical_max_distinct": 10,
//                             "overrides": { "age": { "strategy": "equal_width", "bins": 4 } } } }
//     ],
//     "algorithms": [
//       { "algorithm_id": "beersar", "runs": 3, "base_seed": 1,
//         "params": { "colony_size": 10, "max_cycles": 1000 } }
//     ],
//     "output": { "report_path": "report.txt", "format": "table" },
//     "oracle_cap": 24
//   }
//
// Relative dataset paths resolve against the configuration file's directory.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsar/bee_reducer.hpp"
#include "rsar/data_pipeline.hpp"
#include "rsar/deterministic_reducers.hpp"
#include "rsar/metaheuristic_reducers.hpp"
#include "rsar/reduct_outcome.hpp"

namespace rsar {

enum class AlgorithmId { quickreduct, ebr, oracle, genrsar, antrsar, psorsar, beersar };

AlgorithmId parse_algorithm_id(const std::string& text);
std::string to_string(AlgorithmId id);
bool is_stochastic(AlgorithmId id);

struct DatasetSpec {
  std::string name;
  std::filesystem::path path;
  LoadOptions load;
  MissingPolicy missing_policy = MissingPolicy::drop_rows;
  DiscretizationSpec discretization;
};

struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::quickreduct;
  std::size_t runs = 1;
  std::uint64_t base_seed = 1;
  GaConfig ga;
  AntConfig ant;
  PsoConfig pso;
  // dimension, upper_bound and abandonment_limit left at 0 are filled from
  // the table via BeeConfig::defaults_for.
  BeeConfig bee;
  std::size_t oracle_cap = kDefaultOracleCap;

  // Algorithm-specific defaults, including the run count.
  static AlgorithmSpec defaults(AlgorithmId id);
};

enum class ReportFormat { table, machine };

ReportFormat parse_report_format(const std::string& text);

struct OutputSpec {
  std::filesystem::path report_path;  // empty: standard output
  ReportFormat format = ReportFormat::table;
};

struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<AlgorithmSpec> algorithms;
  OutputSpec output;
  std::size_t oracle_cap = kDefaultOracleCap;

  void validate() const;  // throws ConfigError
};

ExperimentConfig parse_experiment_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Replaces every algorithm's base_seed.
void override_seed(ExperimentConfig& cfg, std::uint64_t seed);

struct PreparedDataset {
  EncodedDataset encoded;
  std::size_t dropped_rows = 0;
};

// load -> missing policy -> discretize/encode.
PreparedDataset prepare_dataset(const DatasetSpec& spec);

// spec.runs executions with seeds base_seed + i, in run order. Deterministic
// methods carry no seed.
std::vector<ReductOutcome> run_algorithm(const DecisionTable& table, const AlgorithmSpec& spec);

struct ReportRow {
  std::string dataset_name;
  std::string algorithm_id;
  std::size_t num_features = 0;
  std::vector<std::size_t> cardinalities;  // one per run
  std::string cardinality_display;         // "k" or "kmin-kmax"
  AttributeSubset best_subset;             // smallest feasible subset over runs
  DependencyRatio gamma_best_ratio;        // fresh dependency(best_subset)
  double gamma_best = 0.0;
  std::size_t feasible_runs = 0;
  std::size_t total_evaluations = 0;
  std::chrono::duration<double> total_elapsed{0.0};
  std::vector<ReductOutcome> runs;
  std::optional<std::string> error;
};

// "k" when every entry equals k, else "min-max". Empty input gives "".
std::string cardinality_display(std::span<const std::size_t> cardinalities);

ReportRow summarize(const std::string& dataset_name, const DecisionTable& table, AlgorithmId id,
                    std::vector<ReductOutcome> runs);

// Rows ordered by (dataset, algorithm) as configured. A dataset that fails to
// load yields error rows for each algorithm; the rest still run. Throws
// ConfigError up front for an invalid configuration.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg);

// table: grid with datasets as columns and algorithms as rows.
// machine: one tab-separated record per row, fixed field order, after a '#'
// header line. Wall time is excluded unless include_timing is set, so reruns
// are byte-identical. Throws ConfigError on empty rows.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format, bool include_timing = false);

struct VerificationEntry {
  ReportRow row;
  std::optional<std::size_t> oracle_cardinality;
  // cardinality - oracle_cardinality over the runs.
  std::optional<long long> min_gap;
  std::optional<long long> max_gap;
  // Runs whose subset fails gamma_R == gamma_C.
  std::size_t invalid_runs = 0;
};

struct DatasetVerification {
  std::string name;
  std::size_t num_features = 0;
  std::optional<AttributeSubset> oracle_subset;
  std::optional<std::string> notice;  // skip or load-failure message
};

struct VerificationReport {
  std::vector<DatasetVerification> datasets;
  std::vector<VerificationEntry> entries;

  bool any_invalid() const;
};

VerificationReport verify_against_oracle(const ExperimentConfig& cfg);
std::string render_verification(const VerificationReport& report);

}  // namespace rsar
