#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "rsar/errors.hpp"
#include "rsar/experiment.hpp"
#include "support/table_gen.hpp"

using namespace rsar;
namespace fs = std::filesystem;

namespace {

// A scratch directory holding T1 and a 30-attribute table as CSV files.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("rsar_experiment_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::ofstream(dir / "t1.csv") << "a,b,d\n0,0,0\n0,1,1\n1,0,1\n1,1,1\n";
    std::ofstream wide(dir / "wide.csv");
    for (int a = 0; a < 30; ++a) wide << "x" << a << ',';
    wide << "d\n";
    for (int r = 0; r < 6; ++r) {
      for (int a = 0; a < 30; ++a) wide << ((r * 7 + a * 3) % 4) << ',';
      wide << (r % 2) << '\n';
    }
  }
  ~Scratch() { fs::remove_all(dir); }
};

std::string config(const std::string& datasets, const std::string& algorithms) {
  return R"({"datasets": [)" + datasets + R"(], "algorithms": [)" + algorithms + "]}";
}

ReductOutcome fake(std::size_t size) {
  ReductOutcome o;
  o.cardinality = size;
  o.subset = AttributeSubset::range(size);
  return o;
}

}  // namespace

TEST_CASE("cardinality display") {
  CHECK(cardinality_display(std::vector<std::size_t>{7, 8, 7}) == "7-8");
  CHECK(cardinality_display(std::vector<std::size_t>{4, 4, 4}) == "4");
  CHECK(cardinality_display(std::vector<std::size_t>{}).empty());
}

TEST_CASE("config parsing and defaults") {
  const auto cfg = parse_experiment_config(
      config(R"({"name": "t", "path": "t.csv", "discretization": {"strategy": "equal_width", "bins": 4}})",
             R"({"algorithm_id": "quickreduct"}, {"algorithm_id": "beersar", "base_seed": 9,
                 "params": {"max_cycles": 50}})"),
      "/data");
  REQUIRE(cfg.datasets.size() == 1);
  CHECK(cfg.datasets[0].path == fs::path("/data/t.csv"));
  CHECK(cfg.datasets[0].discretization.strategy == Strategy::equal_width);
  CHECK(cfg.datasets[0].discretization.bins == 4);
  REQUIRE(cfg.algorithms.size() == 2);
  CHECK(cfg.algorithms[0].runs == 1);
  CHECK(cfg.algorithms[1].runs == 3);
  CHECK(cfg.algorithms[1].base_seed == 9);
  CHECK(cfg.algorithms[1].bee.max_cycles == 50);
  CHECK(cfg.output.format == ReportFormat::table);
}

TEST_CASE("invalid configurations are rejected up front") {
  const std::string ds = R"({"name": "t", "path": "t.csv"})";
  CHECK_THROWS_AS(parse_experiment_config(config(ds, R"({"algorithm_id": "annealing"})")), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(config(ds, "")), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(config("", R"({"algorithm_id": "ebr"})")), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(config(ds, R"({"algorithm_id": "ebr", "runs": 0})")), ConfigError);
  CHECK_THROWS_AS(parse_experiment_config(config(ds, R"({"algorithm_id": "ebr", "color": 1})")), ConfigError);
  CHECK_THROWS_AS(
      parse_experiment_config(config(ds, R"({"algorithm_id": "beersar", "params": {"colony_size": 5}})")),
      ConfigError);
  CHECK_THROWS_AS(parse_experiment_config("{not json"), ConfigError);
}

TEST_CASE("summaries") {
  const auto t = gen::t1();
  auto row = summarize("t1", t, AlgorithmId::quickreduct, {fake(2)});
  CHECK(row.cardinality_display == "2");
  CHECK(row.gamma_best == 1.0);
  row = summarize("t1", t, AlgorithmId::beersar, {fake(2), fake(1), fake(2)});
  CHECK(row.cardinality_display == "1-2");
  CHECK(row.cardinalities == std::vector<std::size_t>{2, 1, 2});
}

TEST_CASE("run_experiment end to end") {
  Scratch s;
  const auto text = config(R"({"name": "t1", "path": "t1.csv"}, {"name": "gone", "path": "missing.csv"})",
                           R"({"algorithm_id": "quickreduct", "runs": 3}, {"algorithm_id": "ebr"},
                               {"algorithm_id": "oracle"}, {"algorithm_id": "genrsar"},
                               {"algorithm_id": "antrsar"}, {"algorithm_id": "psorsar"},
                               {"algorithm_id": "beersar", "params": {"max_cycles": 100}})");
  const auto cfg = parse_experiment_config(text, s.dir);
  const auto rows = run_experiment(cfg);
  REQUIRE(rows.size() == 14);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(rows[i].dataset_name == "t1");
    CHECK_FALSE(rows[i].error);
    CHECK(rows[i].cardinality_display == "2");
    CHECK(rows[i].best_subset == AttributeSubset{0, 1});
    CHECK(rows[i].gamma_best_ratio == dependency_ratio(gen::t1(), rows[i].best_subset));
  }
  CHECK(rows[0].runs.size() == 3);
  CHECK(rows[6].runs.size() == 3);
  CHECK(rows[6].runs[2].seed == cfg.algorithms[6].base_seed + 2);
  for (std::size_t i = 7; i < 14; ++i) CHECK(rows[i].error);

  const auto table = emit_report(rows, ReportFormat::table);
  CHECK(table.find("t1 (2)") != std::string::npos);
  CHECK(table.find("ERR") != std::string::npos);
  CHECK(table.find("! gone/quickreduct") != std::string::npos);

  const auto machine = emit_report(rows, ReportFormat::machine);
  std::istringstream lines(machine);
  std::string line;
  std::size_t fields = 0, count = 0;
  while (std::getline(lines, line)) {
    const auto f = static_cast<std::size_t>(std::count(line.begin(), line.end(), '\t')) + 1;
    if (count++ == 0) fields = f;
    CHECK(f == fields);
  }
  CHECK(count == 15);
  CHECK(machine == emit_report(run_experiment(cfg), ReportFormat::machine));
  CHECK(emit_report(rows, ReportFormat::machine, true) != machine);
}

TEST_CASE("table report layout") {
  const auto t = gen::t1();
  const std::vector<ReportRow> rows{summarize("t1", t, AlgorithmId::quickreduct, {fake(2)}),
                                    summarize("t1", t, AlgorithmId::ebr, {fake(2)})};
  const auto text = emit_report(rows, ReportFormat::table);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
  CHECK_THROWS_AS(emit_report(std::vector<ReportRow>{}, ReportFormat::table), ConfigError);
}

TEST_CASE("verification against the oracle") {
  Scratch s;
  const auto cfg = parse_experiment_config(
      config(R"({"name": "t1", "path": "t1.csv"}, {"name": "wide", "path": "wide.csv"})",
             R"({"algorithm_id": "quickreduct"})"),
      s.dir);
  const auto report = verify_against_oracle(cfg);
  REQUIRE(report.datasets.size() == 2);
  CHECK(report.datasets[0].oracle_subset == AttributeSubset{0, 1});
  CHECK(report.datasets[1].notice);
  REQUIRE(report.entries.size() >= 1);
  CHECK(report.entries[0].min_gap == 0);
  CHECK(report.entries[0].max_gap == 0);
  CHECK_FALSE(report.any_invalid());
  const auto text = render_verification(report);
  CHECK(text.find("wide: ") != std::string::npos);
}

TEST_CASE("seed override") {
  auto cfg = parse_experiment_config(config(R"({"name": "t", "path": "t.csv"})",
                                            R"({"algorithm_id": "psorsar", "base_seed": 3})"));
  override_seed(cfg, 77);
  CHECK(cfg.algorithms[0].base_seed == 77);
}
