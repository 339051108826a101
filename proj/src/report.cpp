#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rsar/errors.hpp"
#include "rsar/experiment.hpp"

namespace rsar {

std::string cardinality_display(std::span<const std::size_t> cardinalities) {
  if (cardinalities.empty()) return "";
  const auto [lo, hi] = std::minmax_element(cardinalities.begin(), cardinalities.end());
  if (*lo == *hi) return std::to_string(*lo);
  return std::to_string(*lo) + "-" + std::to_string(*hi);
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string join(std::span<const std::size_t> values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

std::string render_table(std::span<const ReportRow> rows) {
  std::vector<std::string> datasets, algorithms;
  auto note = [](std::vector<std::string>& list, const std::string& v) {
    if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
  };
  for (const auto& r : rows) {
    note(datasets, r.dataset_name);
    note(algorithms, r.algorithm_id);
  }

  std::vector<std::vector<std::string>> grid(algorithms.size() + 1,
                                             std::vector<std::string>(datasets.size() + 1, "-"));
  grid[0][0] = "Algorithm";
  for (std::size_t d = 0; d < datasets.size(); ++d) grid[0][d + 1] = datasets[d];
  for (std::size_t a = 0; a < algorithms.size(); ++a) grid[a + 1][0] = algorithms[a];

  std::vector<std::string> footnotes;
  for (const auto& r : rows) {
    const auto d = std::find(datasets.begin(), datasets.end(), r.dataset_name) - datasets.begin();
    const auto a = std::find(algorithms.begin(), algorithms.end(), r.algorithm_id) - algorithms.begin();
    if (r.error) {
      grid[a + 1][d + 1] = "ERR";
      footnotes.push_back(r.dataset_name + "/" + r.algorithm_id + ": " + *r.error);
    } else {
      grid[a + 1][d + 1] = r.cardinality_display;
      grid[0][d + 1] = r.dataset_name + " (" + std::to_string(r.num_features) + ")";
    }
  }

  std::vector<std::size_t> width(datasets.size() + 1, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream os;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        text += line[c] + std::string(width[c] - line[c].size(), ' ');
      } else {
        text += "  " + std::string(width[c] - line[c].size(), ' ') + line[c];
      }
    }
    os << text << '\n';
  }
  for (const auto& f : footnotes) os << "! " << f << '\n';
  return os.str();
}

std::string render_machine(std::span<const ReportRow> rows, bool include_timing) {
  std::ostringstream os;
  os << "#dataset\talgorithm\tfeatures\truns\tcardinalities\tdisplay\tgamma_best\tgamma_exact\tbest_subset\t"
        "feasible_runs\ttotal_evaluations\tstatus";
  if (include_timing) os << "\ttotal_elapsed_s";
  os << '\n';
  for (const auto& r : rows) {
    os << r.dataset_name << '\t' << r.algorithm_id << '\t' << r.num_features << '\t' << r.cardinalities.size() << '\t'
       << (r.cardinalities.empty() ? "-" : join(r.cardinalities, ';')) << '\t'
       << (r.cardinality_display.empty() ? "-" : r.cardinality_display) << '\t' << fixed(r.gamma_best, 6) << '\t'
       << r.gamma_best_ratio.positive << '/' << r.gamma_best_ratio.universe << '\t' << r.best_subset.to_string()
       << '\t' << r.feasible_runs << '\t' << r.total_evaluations << '\t'
       << (r.error ? "error: " + sanitize(*r.error) : std::string("ok"));
    if (include_timing) os << '\t' << fixed(r.total_elapsed.count(), 6);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format, bool include_timing) {
  if (rows.empty()) throw ConfigError("nothing to report: no rows");
  return format == ReportFormat::table ? render_table(rows) : render_machine(rows, include_timing);
}

std::string render_verification(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& ds : report.datasets) {
    os << ds.name << ": ";
    if (ds.notice) {
      os << *ds.notice << '\n';
      continue;
    }
    os << "oracle minimum " << ds.oracle_subset->size() << " of " << ds.num_features << " attributes "
       << ds.oracle_subset->to_string() << '\n';
    for (const auto& e : report.entries) {
      if (e.row.dataset_name != ds.name) continue;
      os << "  " << e.row.algorithm_id << ": ";
      if (e.row.error) {
        os << "error: " << *e.row.error << '\n';
        continue;
      }
      os << "sizes " << e.row.cardinality_display << ", gap ";
      if (e.min_gap && e.max_gap) {
        os << (*e.min_gap == *e.max_gap ? std::to_string(*e.min_gap)
                                        : std::to_string(*e.min_gap) + ".." + std::to_string(*e.max_gap));
      }
      if (e.invalid_runs > 0) os << "  INVALID: " << e.invalid_runs << " run(s) not a reduct";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace rsar
