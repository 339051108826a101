#pragma once

// Delimited-text ingestion into DecisionTable: loading, missing-value policy,
// discretisation of numeric columns and dense categorical encoding.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsar/rough_core.hpp"

namespace rsar {

struct RawDataset {
  std::vector<std::string> column_names;
  // nullopt marks a missing cell.
  std::vector<std::vector<std::optional<std::string>>> cells;
  std::size_t decision_column = 0;

  std::size_t num_rows() const { return cells.size(); }
  std::size_t num_columns() const { return column_names.size(); }
  std::size_t count_missing() const;
};

struct LoadOptions {
  char delimiter = ',';
  bool has_header = true;
  std::string missing_marker = "?";
  // Defaults to the last column.
  std::optional<std::size_t> decision_column;
};

// Cells are split on the delimiter and stripped of surrounding blanks; blank
// lines are skipped. Without a header, columns are named c0, c1, ...
// Throws ParseError (with the 1-based line) on ragged rows or empty input.
RawDataset parse_delimited(std::istream& in, const LoadOptions& options = {});
RawDataset load_delimited(const std::filesystem::path& path, const LoadOptions& options = {});

enum class MissingPolicy { drop_rows, reject };

MissingPolicy parse_missing_policy(const std::string& text);

struct MissingPolicyResult {
  RawDataset data;
  std::size_t dropped_rows = 0;
};

// drop_rows removes every row with a missing cell; reject throws
// MissingValueError listing the affected (0-based) rows.
MissingPolicyResult apply_missing_policy(RawDataset raw, MissingPolicy policy);

enum class Strategy { equal_width, equal_frequency, none };

Strategy parse_strategy(const std::string& text);
std::string to_string(Strategy s);

struct ColumnDiscretization {
  Strategy strategy = Strategy::equal_frequency;
  std::size_t bins = 3;
};

struct DiscretizationSpec {
  Strategy strategy = Strategy::equal_frequency;
  std::size_t bins = 3;
  // Numeric columns holding only integers with at most this many distinct
  // values are taken as integer-coded categories and only re-encoded, unless
  // overridden. 0 disables the rule.
  std::size_t integer_categorical_max_distinct = 10;
  // Keyed by column name.
  std::map<std::string, ColumnDiscretization> overrides;

  void validate() const;  // throws ConfigError
};

// How one output column was produced; labels[code] reproduces the original
// value (categorical) or the bin interval (binned).
struct ColumnEncoding {
  std::string name;
  bool numeric = false;
  Strategy strategy = Strategy::none;
  std::vector<double> cut_points;  // code = number of cut points <= value
  std::vector<std::string> labels;
};

struct EncodedDataset {
  DecisionTable table;
  std::vector<ColumnEncoding> columns;  // condition columns, table order
  ColumnEncoding decision;
  std::vector<std::string> notes;       // non-fatal fallbacks worth logging
};

// Throws MissingValueError when missing cells remain and ParseError when a
// column forced to a binning strategy holds non-numeric values.
EncodedDataset encode_dataset(const RawDataset& raw, const DiscretizationSpec& spec = {});
DecisionTable discretize_and_encode(const RawDataset& raw, const DiscretizationSpec& spec = {});

// Header line of attribute names plus decision name, then one row of integer
// codes per object.
void write_encoded_table(std::ostream& out, const DecisionTable& table, char delimiter = ',');

}  // namespace rsar
