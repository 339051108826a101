// rsar: rough-set reduct experiments from the command line.
//
//   rsar run <config> [--seed N] [--format table|machine] [--out PATH] [--timing]
//   rsar verify <config> [--seed N] [--out PATH]
//   rsar encode <dataset> <binning> [--delimiter C] [--no-header] [--missing M]
//               [--missing-policy drop_rows|reject] [--decision-column K] [--out PATH]
//
// <binning> for encode is "default", "none", or "<strategy>:<bins>" with
// strategy equal_width or equal_frequency.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rsar/data_pipeline.hpp"
#include "rsar/errors.hpp"
#include "rsar/experiment.hpp"

namespace {

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rsar::Error("cannot write " + path);
  out << text;
}

rsar::DiscretizationSpec parse_spec(const std::string& text) {
  rsar::DiscretizationSpec spec;
  if (text == "default") return spec;
  const auto colon = text.find(':');
  spec.strategy = rsar::parse_strategy(text.substr(0, colon));
  if (colon != std::string::npos) {
    try {
      spec.bins = std::stoul(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw rsar::ConfigError("bad bin count in '" + text + "'");
    }
  }
  // An explicit strategy applies to every numeric column.
  spec.integer_categorical_max_distinct = 0;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set attribute reduction experiments"};
  app.require_subcommand(1);

  std::string config_path, out_path, format_text;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  auto* run = app.add_subcommand("run", "Run every configured (dataset, algorithm) pair and print the report");
  run->add_option("config", config_path, "Experiment configuration (JSON)")->required();
  run->add_option("--seed", seed, "Override every algorithm's base_seed");
  run->add_option("--format", format_text, "Report format: table or machine")
      ->check(CLI::IsMember({"table", "machine"}));
  run->add_option("--out", out_path, "Write the report here instead of the configured path");
  run->add_flag("--timing", timing, "Append total wall time to machine-format records");

  auto* verify = app.add_subcommand("verify", "Compare every algorithm with the exhaustive minimal reduct");
  verify->add_option("config", config_path, "Experiment configuration (JSON)")->required();
  verify->add_option("--seed", seed, "Override every algorithm's base_seed");
  verify->add_option("--out", out_path, "Write the verification report here");

  std::string dataset_path, spec_text, delimiter = ",", missing = "?", policy = "drop_rows";
  bool no_header = false;
  std::optional<std::size_t> decision_column;
  auto* encode = app.add_subcommand("encode", "Dump a dataset as the integer-coded decision table");
  encode->add_option("dataset", dataset_path, "Delimited text file")->required();
  encode->add_option("binning", spec_text, "default | none | equal_width:<bins> | equal_frequency:<bins>")->required();
  encode->add_option("--delimiter", delimiter, "Field delimiter (single character, or \\t)");
  encode->add_flag("--no-header", no_header, "First line is data, not column names");
  encode->add_option("--missing", missing, "Missing-value marker");
  encode->add_option("--missing-policy", policy, "drop_rows or reject");
  encode->add_option("--decision-column", decision_column, "0-based decision column (default: last)");
  encode->add_option("--out", out_path, "Write the encoded table here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      rsar::ExperimentConfig cfg = rsar::load_experiment_config(config_path);
      if (seed) rsar::override_seed(cfg, *seed);
      const auto format = format_text.empty() ? cfg.output.format : rsar::parse_report_format(format_text);
      const auto rows = rsar::run_experiment(cfg);
      const std::string target = !out_path.empty() ? out_path : cfg.output.report_path.string();
      write_output(rsar::emit_report(rows, format, timing), target);
      return 0;
    }
    if (verify->parsed()) {
      rsar::ExperimentConfig cfg = rsar::load_experiment_config(config_path);
      if (seed) rsar::override_seed(cfg, *seed);
      const auto report = rsar::verify_against_oracle(cfg);
      write_output(rsar::render_verification(report), out_path);
      return report.any_invalid() ? 1 : 0;
    }
    if (encode->parsed()) {
      rsar::LoadOptions load;
      if (delimiter == "\\t" || delimiter == "tab") delimiter = "\t";
      if (delimiter.size() != 1) throw rsar::ConfigError("--delimiter must be a single character");
      load.delimiter = delimiter.front();
      load.has_header = !no_header;
      load.missing_marker = missing;
      load.decision_column = decision_column;
      const auto spec = parse_spec(spec_text);
      auto cleaned = rsar::apply_missing_policy(rsar::load_delimited(dataset_path, load),
                                                rsar::parse_missing_policy(policy));
      if (cleaned.dropped_rows > 0) std::cerr << "dropped " << cleaned.dropped_rows << " row(s) with missing values\n";
      const auto encoded = rsar::encode_dataset(cleaned.data, spec);
      for (const auto& note : encoded.notes) std::cerr << "note: " << note << '\n';
      std::ostringstream os;
      rsar::write_encoded_table(os, encoded.table, load.delimiter);
      write_output(os.str(), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "rsar: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
