#include "rsar/data_pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rsar/errors.hpp"

namespace rsar {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const auto end = line.find(delimiter, begin);
    out.emplace_back(trim(std::string_view(line).substr(begin, end == std::string::npos ? std::string::npos : end - begin)));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return out;
}

std::optional<double> parse_real(const std::string& s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::string format_real(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::size_t RawDataset::count_missing() const {
  std::size_t missing = 0;
  for (const auto& row : cells)
    for (const auto& cell : row) missing += cell.has_value() ? 0 : 1;
  return missing;
}

RawDataset parse_delimited(std::istream& in, const LoadOptions& options) {
  RawDataset raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool header_pending = options.has_header;
  std::size_t header_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line, options.delimiter);
    if (header_pending) {
      raw.column_names = std::move(fields);
      width = raw.column_names.size();
      header_pending = false;
      header_line = line_no;
      continue;
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) + " cells, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    std::vector<std::optional<std::string>> row;
    row.reserve(width);
    for (auto& f : fields) {
      if (!options.missing_marker.empty() && f == options.missing_marker) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(std::move(f));
      }
    }
    raw.cells.push_back(std::move(row));
  }

  if (raw.cells.empty()) {
    throw ParseError(header_line ? "input has a header but no data rows" : "input is empty", header_line);
  }
  if (raw.column_names.empty()) {
    for (std::size_t c = 0; c < width; ++c) raw.column_names.push_back("c" + std::to_string(c));
  }
  if (width < 2) throw ParseError("need at least one condition column and a decision column", 0);
  raw.decision_column = options.decision_column.value_or(width - 1);
  if (raw.decision_column >= width) {
    throw ConfigError("decision column " + std::to_string(raw.decision_column) + " out of range for " +
                      std::to_string(width) + " columns");
  }
  return raw;
}

RawDataset load_delimited(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_delimited(in, options);
}

MissingPolicy parse_missing_policy(const std::string& text) {
  if (text == "drop_rows") return MissingPolicy::drop_rows;
  if (text == "reject") return MissingPolicy::reject;
  throw ConfigError("unknown missing policy '" + text + "' (expected drop_rows or reject)");
}

MissingPolicyResult apply_missing_policy(RawDataset raw, MissingPolicy policy) {
  std::vector<std::size_t> affected;
  for (std::size_t r = 0; r < raw.cells.size(); ++r) {
    const auto& row = raw.cells[r];
    if (std::any_of(row.begin(), row.end(), [](const auto& c) { return !c.has_value(); })) affected.push_back(r);
  }
  MissingPolicyResult result;
  if (affected.empty()) {
    result.data = std::move(raw);
    return result;
  }
  if (policy == MissingPolicy::reject) {
    std::string rows;
    for (std::size_t k = 0; k < affected.size(); ++k) {
      if (k) rows += ", ";
      rows += std::to_string(affected[k]);
    }
    throw MissingValueError("missing values in " + std::to_string(affected.size()) + " row(s): " + rows);
  }
  std::vector<std::vector<std::optional<std::string>>> kept;
  kept.reserve(raw.cells.size() - affected.size());
  std::size_t next = 0;
  for (std::size_t r = 0; r < raw.cells.size(); ++r) {
    if (next < affected.size() && affected[next] == r) {
      ++next;
      continue;
    }
    kept.push_back(std::move(raw.cells[r]));
  }
  raw.cells = std::move(kept);
  result.dropped_rows = affected.size();
  result.data = std::move(raw);
  return result;
}

Strategy parse_strategy(const std::string& text) {
  if (text == "equal_width") return Strategy::equal_width;
  if (text == "equal_frequency") return Strategy::equal_frequency;
  if (text == "none") return Strategy::none;
  throw ConfigError("unknown discretization strategy '" + text + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::equal_width:
      return "equal_width";
    case Strategy::equal_frequency:
      return "equal_frequency";
    case Strategy::none:
      return "none";
  }
  return "none";
}

void DiscretizationSpec::validate() const {
  if (strategy != Strategy::none && bins < 2) throw ConfigError("discretization needs at least 2 bins");
  for (const auto& [name, col] : overrides) {
    if (col.strategy != Strategy::none && col.bins < 2) {
      throw ConfigError("override for column '" + name + "' needs at least 2 bins");
    }
  }
}

namespace {

struct EncodedColumn {
  std::vector<Code> codes;
  ColumnEncoding encoding;
};

// Dense codes in order of first appearance.
EncodedColumn encode_by_appearance(const std::vector<std::string>& values, std::string name) {
  EncodedColumn out;
  out.encoding.name = std::move(name);
  std::unordered_map<std::string, Code> ids;
  out.codes.reserve(values.size());
  for (const auto& v : values) {
    auto [it, inserted] = ids.try_emplace(v, static_cast<Code>(ids.size()));
    if (inserted) out.encoding.labels.push_back(v);
    out.codes.push_back(it->second);
  }
  return out;
}

// Dense codes in ascending numeric order.
EncodedColumn encode_by_value(const std::vector<std::string>& values, const std::vector<double>& numbers,
                              std::string name) {
  EncodedColumn out;
  out.encoding.name = std::move(name);
  out.encoding.numeric = true;
  std::vector<double> distinct = numbers;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.encoding.labels.assign(distinct.size(), {});
  out.codes.reserve(numbers.size());
  for (std::size_t r = 0; r < numbers.size(); ++r) {
    const auto code = static_cast<Code>(std::lower_bound(distinct.begin(), distinct.end(), numbers[r]) - distinct.begin());
    if (out.encoding.labels[code].empty()) out.encoding.labels[code] = values[r];
    out.codes.push_back(code);
  }
  return out;
}

// Codes from cut points, then compacted so that empty bins vanish.
EncodedColumn encode_by_cuts(const std::vector<double>& numbers, std::vector<double> cuts, Strategy strategy,
                             std::string name) {
  EncodedColumn out;
  out.encoding.name = std::move(name);
  out.encoding.numeric = true;
  out.encoding.strategy = strategy;
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::size_t> raw_codes(numbers.size());
  std::vector<bool> used(cuts.size() + 1, false);
  for (std::size_t r = 0; r < numbers.size(); ++r) {
    raw_codes[r] = static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), numbers[r]) - cuts.begin());
    used[raw_codes[r]] = true;
  }
  // Drop cut points that separate nothing: keep cut k iff bin k is used.
  std::vector<double> kept_cuts;
  std::vector<Code> remap(cuts.size() + 1, 0);
  Code next = 0;
  for (std::size_t b = 0; b <= cuts.size(); ++b) {
    if (!used[b]) continue;
    if (next > 0) kept_cuts.push_back(cuts[b - 1]);
    remap[b] = next++;
  }
  out.codes.reserve(numbers.size());
  for (std::size_t code : raw_codes) out.codes.push_back(remap[code]);
  out.encoding.cut_points = kept_cuts;

  for (std::size_t b = 0; b <= kept_cuts.size(); ++b) {
    const std::string lo = b == 0 ? "-inf" : format_real(kept_cuts[b - 1]);
    const std::string hi = b == kept_cuts.size() ? "+inf" : format_real(kept_cuts[b]);
    out.encoding.labels.push_back("[" + lo + ", " + hi + ")");
  }
  return out;
}

std::vector<double> equal_width_cuts(const std::vector<double>& numbers, std::size_t bins) {
  const auto [lo, hi] = std::minmax_element(numbers.begin(), numbers.end());
  const double width = (*hi - *lo) / static_cast<double>(bins);
  std::vector<double> cuts;
  if (!(width > 0.0)) return cuts;
  for (std::size_t k = 1; k < bins; ++k) cuts.push_back(*lo + width * static_cast<double>(k));
  return cuts;
}

// Cut k sits at the sorted value that opens the (k+1)-th chunk of n / bins
// values; ties move the whole run of equal values into the upper bin.
std::vector<double> equal_frequency_cuts(const std::vector<double>& numbers, std::size_t bins) {
  std::vector<double> sorted = numbers;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<double> cuts;
  for (std::size_t k = 1; k < bins; ++k) {
    const std::size_t idx = k * n / bins;
    if (idx == 0 || idx >= n) continue;
    if (sorted[idx] > sorted.front()) cuts.push_back(sorted[idx]);
  }
  return cuts;
}

}  // namespace

EncodedDataset encode_dataset(const RawDataset& raw, const DiscretizationSpec& spec) {
  spec.validate();
  if (raw.count_missing() != 0) {
    throw MissingValueError("dataset still has " + std::to_string(raw.count_missing()) +
                            " missing cell(s); apply a missing-value policy first");
  }
  for (const auto& [name, col] : spec.overrides) {
    if (std::find(raw.column_names.begin(), raw.column_names.end(), name) == raw.column_names.end()) {
      throw ConfigError("discretization override names unknown column '" + name + "'");
    }
  }

  EncodedDataset out;
  std::vector<std::vector<Code>> columns;
  std::vector<std::string> names;
  std::vector<Code> decisions;

  for (std::size_t c = 0; c < raw.num_columns(); ++c) {
    const std::string& name = raw.column_names[c];
    std::vector<std::string> values;
    values.reserve(raw.num_rows());
    for (const auto& row : raw.cells) values.push_back(*row[c]);

    if (c == raw.decision_column) {
      auto enc = encode_by_appearance(values, name);
      decisions = std::move(enc.codes);
      out.decision = std::move(enc.encoding);
      continue;
    }

    std::vector<double> numbers;
    numbers.reserve(values.size());
    bool numeric = true;
    for (const auto& v : values) {
      const auto x = parse_real(v);
      if (!x) {
        numeric = false;
        break;
      }
      numbers.push_back(*x);
    }

    const auto override_it = spec.overrides.find(name);
    const bool overridden = override_it != spec.overrides.end();
    Strategy strategy = overridden ? override_it->second.strategy : spec.strategy;
    const std::size_t bins = overridden ? override_it->second.bins : spec.bins;

    EncodedColumn enc;
    if (!numeric) {
      if (overridden && strategy != Strategy::none) {
        throw ParseError("column '" + name + "' is not numeric but is configured for " + to_string(strategy), 0);
      }
      enc = encode_by_appearance(values, name);
    } else {
      if (!overridden && strategy != Strategy::none && spec.integer_categorical_max_distinct > 0) {
        const bool integral = std::all_of(numbers.begin(), numbers.end(), [](double x) { return x == std::trunc(x); });
        std::vector<double> distinct = numbers;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (integral && distinct.size() <= spec.integer_categorical_max_distinct) strategy = Strategy::none;
      }
      switch (strategy) {
        case Strategy::none:
          enc = encode_by_value(values, numbers, name);
          break;
        case Strategy::equal_width:
          enc = encode_by_cuts(numbers, equal_width_cuts(numbers, bins), strategy, name);
          break;
        case Strategy::equal_frequency:
          enc = encode_by_cuts(numbers, equal_frequency_cuts(numbers, bins), strategy, name);
          break;
      }
      if (strategy != Strategy::none && enc.encoding.cut_points.empty()) {
        out.notes.push_back("column '" + name + "' is constant; " + to_string(strategy) + " fell back to a single code");
      }
    }
    columns.push_back(std::move(enc.codes));
    names.push_back(name);
    out.columns.push_back(std::move(enc.encoding));
  }

  out.table = DecisionTable::from_columns(columns, std::move(decisions), std::move(names), out.decision.name);
  return out;
}

DecisionTable discretize_and_encode(const RawDataset& raw, const DiscretizationSpec& spec) {
  return encode_dataset(raw, spec).table;
}

void write_encoded_table(std::ostream& out, const DecisionTable& table, char delimiter) {
  for (const auto& name : table.attr_names()) out << name << delimiter;
  out << table.decision_name() << '\n';
  for (std::size_t x = 0; x < table.num_objects(); ++x) {
    for (Code v : table.row(x)) out << v << delimiter;
    out << table.decision(x) << '\n';
  }
}

}  // namespace rsar
