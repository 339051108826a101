// Acceptance gate: one PASS / FAIL / SKIP line per criterion. Exit status is
// nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "rsar/bee_reducer.hpp"
#include "rsar/deterministic_reducers.hpp"
#include "rsar/experiment.hpp"
#include "rsar/metaheuristic_reducers.hpp"
#include "support/brute_force.hpp"
#include "support/table_gen.hpp"

using namespace rsar;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kLimitOracle = 10.0;       // seconds, criterion 1
constexpr double kLimitGreedy = 10.0;       // seconds, criterion 2
constexpr double kLimitBee = 120.0;         // seconds, criterion 4
constexpr double kLimitDataset = 300.0;     // seconds per dataset, criterion 5
constexpr double kLimitProperties = 60.0;   // seconds, criterion 8
constexpr double kBeeOptimalShare = 0.95;   // criterion 4
constexpr std::size_t kTableSlack = 2;      // attributes, criterion 5
constexpr double kFormulaTolerance = 1e-12; // criterion 6
constexpr std::size_t kRandomTables = 200;
constexpr std::uint64_t kTableSeed = 20240601;

using Clock = std::chrono::steady_clock;

enum class Verdict { pass, fail, skip };

struct Result {
  Verdict verdict = Verdict::pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<DecisionTable> random_tables() {
  std::mt19937_64 rng(kTableSeed);
  std::vector<DecisionTable> out;
  for (std::size_t i = 0; i < kRandomTables; ++i) out.push_back(gen::random_table(rng));
  return out;
}

Result oracle_equivalence() {
  const auto tables = random_tables();
  const auto start = Clock::now();
  std::size_t bad = 0;
  for (const auto& t : tables) {
    const auto out = exhaustive_min_reduct(t);
    const bool reduct = oracle::is_reduct(t, oracle::to_mask(out.subset));
    if (!reduct || out.cardinality != oracle::min_reduct_size(t)) ++bad;
  }
  const double secs = seconds_since(start);
  return {bad == 0 && secs < kLimitOracle ? Verdict::pass : Verdict::fail,
          fmt("%zu/%zu tables wrong, %.3f s (limit %.0f s)", bad, tables.size(), secs, kLimitOracle)};
}

Result greedy_validity() {
  const auto tables = random_tables();
  const auto start = Clock::now();
  std::size_t bad_q = 0, bad_e = 0, over_budget = 0, worst = 0;
  for (const auto& t : tables) {
    const auto full = oracle::positive_count(t, oracle::full_mask(t.num_condition_attrs()));
    const auto q = quick_reduct(t);
    const auto e = ebr(t);
    if (oracle::positive_count(t, oracle::to_mask(q.subset)) != full) ++bad_q;
    if (oracle::positive_count(t, oracle::to_mask(e.subset)) != full) ++bad_e;
    const std::size_t n = t.num_condition_attrs();
    if (q.evaluations > (n * n + n) / 2) ++over_budget;
    worst = std::max(worst, q.evaluations);
  }
  const double secs = seconds_since(start);
  const bool ok = bad_q == 0 && bad_e == 0 && over_budget == 0 && secs < kLimitGreedy;
  return {ok ? Verdict::pass : Verdict::fail,
          fmt("quickreduct invalid %zu, ebr invalid %zu, over evaluation budget %zu (max %zu), %.3f s", bad_q, bad_e,
              over_budget, worst, secs)};
}

Result micro_tables() {
  std::vector<std::string> misses;
  auto expect = [&](const char* what, const AttributeSubset& got, const AttributeSubset& want) {
    if (!(got == want)) misses.push_back(std::string(what) + " gave " + got.to_string());
  };
  const auto t0 = gen::t0(), t1 = gen::t1();
  expect("T0 quickreduct", quick_reduct(t0).subset, {0});
  expect("T0 ebr", ebr(t0).subset, {0});
  expect("T0 oracle", exhaustive_min_reduct(t0).subset, {0});
  expect("T1 quickreduct", quick_reduct(t1).subset, {0, 1});
  expect("T1 ebr", ebr(t1).subset, {0, 1});
  expect("T1 oracle", exhaustive_min_reduct(t1).subset, {0, 1});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    expect("T1 genrsar", gen_rsar(t1, {}, seed).subset, {0, 1});
    expect("T1 antrsar", ant_rsar(t1, {}, seed).subset, {0, 1});
    expect("T1 psorsar", pso_rsar(t1, {}, seed).subset, {0, 1});
    expect("T1 beersar", bee_rsar(t1, BeeConfig::defaults_for(t1), seed).subset, {0, 1});
  }
  std::string detail = misses.empty() ? "all fixtures match" : misses.front();
  return {misses.empty() ? Verdict::pass : Verdict::fail, detail};
}

// 20 consistent tables: 40 objects, 8 attributes with 3 values each, binary
// decision assigned per distinct condition vector.
Result bee_optimality() {
  std::mt19937_64 rng(kTableSeed + 4);
  const auto start = Clock::now();
  std::size_t runs = 0, optimal = 0, infeasible = 0;
  for (int i = 0; i < 20; ++i) {
    const auto t = gen::consistent_table(rng, 40, 8, 3, 2);
    const std::size_t minimum = oracle::min_reduct_size(t);
    const auto cfg = BeeConfig::defaults_for(t);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto out = bee_rsar(t, cfg, seed);
      ++runs;
      if (!oracle::is_reduct(t, oracle::to_mask(out.subset))) ++infeasible;
      if (out.cardinality == minimum) ++optimal;
    }
  }
  const double secs = seconds_since(start);
  const double share = static_cast<double>(optimal) / static_cast<double>(runs);
  const bool ok = share >= kBeeOptimalShare && infeasible == 0 && secs < kLimitBee;
  return {ok ? Verdict::pass : Verdict::fail,
          fmt("minimal in %zu/%zu runs (%.1f%%, need %.0f%%), %zu not reducts, %.1f s", optimal, runs, 100.0 * share,
              100.0 * kBeeOptimalShare, infeasible, secs)};
}

struct Target {
  const char* name;
  const char* file;
  std::size_t size;
  bool optional;
};

Result published_sizes() {
  const std::array<Target, 5> targets{{{"wisconsin", "wisconsin.csv", 5, false},
                                       {"cleveland", "cleveland.csv", 7, false},
                                       {"dermatology", "dermatology.csv", 10, false},
                                       {"lung", "lung_cancer.csv", 4, false},
                                       {"hiv", "hiv.csv", 0, true}}};
  std::vector<std::string> lines, missing;
  bool failed = false;
  std::size_t checked = 0;
  for (const auto& target : targets) {
    const fs::path path = fs::path(RSAR_DATA_DIR) / target.file;
    if (!fs::exists(path)) {
      if (!target.optional) missing.push_back(target.name);
      continue;
    }
    if (target.optional) continue;
    ++checked;
    const auto start = Clock::now();
    DatasetSpec spec;
    spec.name = target.name;
    spec.path = path;
    const auto prepared = prepare_dataset(spec);
    const auto& table = prepared.encoded.table;
    const std::size_t q = quick_reduct(table).cardinality;
    const std::size_t e = ebr(table).cardinality;
    const auto bees = bee_rsar_runs(table, BeeConfig::defaults_for(table), 1);
    std::size_t bee_ok = 0;
    std::string bee_sizes;
    for (const auto& b : bees) {
      if (b.cardinality <= q) ++bee_ok;
      bee_sizes += (bee_sizes.empty() ? "" : ",") + std::to_string(b.cardinality);
    }
    const double secs = seconds_since(start);
    const auto within = [&](std::size_t v) { return v + kTableSlack >= target.size && v <= target.size + kTableSlack; };
    const bool ok = within(q) && within(e) && bee_ok >= 2 && secs < kLimitDataset;
    failed |= !ok;
    lines.push_back(fmt("%s quickreduct %zu ebr %zu (target %zu+-%zu), beersar {%s} <= quickreduct in %zu/3, %.1f s",
                        target.name, q, e, target.size, kTableSlack, bee_sizes.c_str(), bee_ok, secs));
  }
  std::string detail;
  for (const auto& l : lines) detail += (detail.empty() ? "" : "; ") + l;
  if (!missing.empty()) {
    std::string names;
    for (const auto& m : missing) names += (names.empty() ? "" : ", ") + m;
    detail += (detail.empty() ? "" : "; ") + ("not bundled: " + names);
  }
  if (checked == 0) return {Verdict::skip, detail};
  return {failed ? Verdict::fail : Verdict::pass, detail};
}

Result formula_fixtures() {
  std::vector<std::string> misses;
  auto check = [&](const char* what, double got, double want) {
    if (!(std::abs(got - want) <= kFormulaTolerance)) misses.push_back(fmt("%s = %.17g, want %.17g", what, got, want));
  };
  {
    // gamma 1 with 2 of 10 attributes.
    std::vector<std::vector<Code>> rows;
    for (Code r = 0; r < 4; ++r) {
      std::vector<Code> row(10, 0);
      row[0] = r % 2;
      row[1] = r / 2;
      rows.push_back(row);
    }
    const DecisionTable t(rows, {0, 1, 0, 1});
    BinaryChromosome c{std::vector<std::uint8_t>(10, 0)};
    c.bits[0] = c.bits[1] = 1;
    check("ga fitness", ga_fitness(t, c), 0.8);
  }
  check("sigmoid(0)", pso_sigmoid(0.0), 0.5);
  check("abc fitness(3)", abc_fitness(3.0), 0.25);
  const auto p = selection_probabilities(std::vector<double>{3.0, 1.0});
  check("p[0] of {3,1}", p[0], 0.75);
  check("p[1] of {3,1}", p[1], 0.25);
  BeeConfig cfg;
  cfg.dimension = 2;
  cfg.lower_bound = 1.0;
  cfg.upper_bound = 4.0;
  const auto lo = scout_reinit(cfg, std::vector<double>{0.0, 0.0});
  const auto hi = scout_reinit(cfg, std::vector<double>{1.0, 1.0});
  check("scout lower end", lo[0], 1.0);
  check("scout upper end", hi[1], 4.0);
  if (!(decode_position(std::vector<double>{1.45, 1.76, 3.33, 1.01}, 4) == AttributeSubset{0, 2}))
    misses.push_back("decode of {1.45,1.76,3.33,1.01} is not features {1,3}");
  return {misses.empty() ? Verdict::pass : Verdict::fail, misses.empty() ? "8 fixtures exact" : misses.front()};
}

std::string experiment_json() {
  const std::string dir = RSAR_DATA_DIR;
  return R"({"datasets": [{"name": "wisconsin", "path": ")" + dir + R"(/wisconsin.csv"},
                          {"name": "cleveland", "path": ")" + dir + R"(/cleveland.csv"}],
             "algorithms": [{"algorithm_id": "quickreduct"}, {"algorithm_id": "ebr"},
                            {"algorithm_id": "genrsar"}, {"algorithm_id": "antrsar"},
                            {"algorithm_id": "psorsar"}, {"algorithm_id": "beersar"}],
             "output": {"format": "machine"}})";
}

Result determinism() {
  std::mt19937_64 rng(kTableSeed + 7);
  const auto t = gen::consistent_table(rng, 30, 7, 3, 3);
  std::vector<std::string> diffs;
  for (AlgorithmId id : {AlgorithmId::genrsar, AlgorithmId::antrsar, AlgorithmId::psorsar, AlgorithmId::beersar}) {
    auto spec = AlgorithmSpec::defaults(id);
    spec.base_seed = 31;
    auto line = [&] {
      const std::vector<ReportRow> rows{summarize("random", t, id, run_algorithm(t, spec))};
      return emit_report(rows, ReportFormat::machine);
    };
    if (line() != line()) diffs.push_back(to_string(id));
  }
  const auto cfg = parse_experiment_config(experiment_json());
  const auto first = emit_report(run_experiment(cfg), ReportFormat::machine);
  const auto second = emit_report(run_experiment(cfg), ReportFormat::machine);
  if (first != second) diffs.push_back("full experiment");
  std::string detail = diffs.empty() ? "4 algorithms and the full experiment reproduce byte for byte" : "differs: ";
  for (const auto& d : diffs) detail += d + " ";
  return {diffs.empty() ? Verdict::pass : Verdict::fail, detail};
}

Result invariant_suites() {
  const auto start = Clock::now();
  const std::string cmd = std::string("\"") + RSAR_PROPERTY_BIN + "\" 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {Verdict::fail, "could not start the property suite"};
  std::string output;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) output += buf.data();
  const int raw_status = pclose(pipe.release());
  const int status = WIFEXITED(raw_status) ? WEXITSTATUS(raw_status) : -1;
  const double secs = seconds_since(start);
  std::size_t cases = 0;
  if (const auto at = output.find("property cases: "); at != std::string::npos)
    cases = std::stoul(output.substr(at + 16));
  const bool ok = status == 0 && cases >= 1000 && secs < kLimitProperties;
  std::string detail = fmt("%zu generated cases, exit %d, %.1f s (limit %.0f s)", cases, status, secs, kLimitProperties);
  // Name the first failing check, if any.
  if (const auto at = output.find("TEST CASE:"); !ok && at != std::string::npos) {
    const auto begin = output.find_first_not_of(' ', at + 10);
    detail += "; failing: " + output.substr(begin, output.find('\n', begin) - begin);
    if (const auto log = output.find("logged: ", at); log != std::string::npos)
      detail += " (" + output.substr(log + 8, output.find('\n', log) - log - 8) + ")";
  }
  return {ok ? Verdict::pass : Verdict::fail, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"1 oracle equivalence on 200 random tables", oracle_equivalence},
      {"2 quickreduct/ebr validity and evaluation budget", greedy_validity},
      {"3 micro-table golden results", micro_tables},
      {"4 beersar optimality on 8-attribute tables", bee_optimality},
      {"5 reference reduct sizes on bundled datasets", published_sizes},
      {"6 formula fixtures", formula_fixtures},
      {"7 seeded determinism", determinism},
      {"8 invariant suites", invariant_suites},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {Verdict::fail, std::string("threw: ") + e.what()};
    }
    const char* tag = r.verdict == Verdict::pass ? "PASS" : r.verdict == Verdict::fail ? "FAIL" : "SKIP";
    if (r.verdict == Verdict::fail) ++failures;
    std::printf("[%s] %s: %s\n", tag, name, r.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
