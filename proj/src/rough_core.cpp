#include "rsar/rough_core.hpp"

#include <cmath>
#include <unordered_map>

#include "rsar/errors.hpp"

namespace rsar {

namespace {

std::vector<std::size_t> column_cardinalities(const std::vector<Code>& values, std::size_t num_rows,
                                              std::size_t num_cols, const char* what) {
  std::vector<std::size_t> cards(num_cols, 0);
  for (std::size_t c = 0; c < num_cols; ++c) {
    Code max_code = 0;
    for (std::size_t r = 0; r < num_rows; ++r) max_code = std::max(max_code, values[r * num_cols + c]);
    if (num_rows == 0) continue;
    std::vector<bool> seen(static_cast<std::size_t>(max_code) + 1, false);
    for (std::size_t r = 0; r < num_rows; ++r) seen[values[r * num_cols + c]] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw InvalidTableError(std::string(what) + " column " + std::to_string(c) + " codes are not dense in [0, " +
                              std::to_string(max_code + 1) + ")");
    }
    cards[c] = static_cast<std::size_t>(max_code) + 1;
  }
  return cards;
}

}  // namespace

DecisionTable::DecisionTable(std::vector<std::vector<Code>> rows, std::vector<Code> decisions,
                             std::vector<std::string> attr_names, std::string decision_name)
    : decisions_(std::move(decisions)), attr_names_(std::move(attr_names)), decision_name_(std::move(decision_name)) {
  if (rows.size() != decisions_.size()) {
    throw InvalidTableError("decision column has " + std::to_string(decisions_.size()) + " codes for " +
                            std::to_string(rows.size()) + " objects");
  }
  num_attrs_ = rows.empty() ? attr_names_.size() : rows.front().size();
  values_.reserve(rows.size() * num_attrs_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != num_attrs_) {
      throw InvalidTableError("object " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " condition codes, expected " + std::to_string(num_attrs_));
    }
    values_.insert(values_.end(), rows[r].begin(), rows[r].end());
  }
  if (attr_names_.empty()) {
    for (std::size_t a = 0; a < num_attrs_; ++a) attr_names_.push_back("a" + std::to_string(a));
  } else if (attr_names_.size() != num_attrs_) {
    throw InvalidTableError("expected " + std::to_string(num_attrs_) + " attribute names, got " +
                            std::to_string(attr_names_.size()));
  }
  cardinalities_ = column_cardinalities(values_, rows.size(), num_attrs_, "condition");
  const auto dcard = column_cardinalities(decisions_, decisions_.size(), 1, "decision");
  decision_cardinality_ = dcard.front();
}

DecisionTable DecisionTable::from_columns(const std::vector<std::vector<Code>>& columns, std::vector<Code> decisions,
                                          std::vector<std::string> attr_names, std::string decision_name) {
  const std::size_t n = decisions.size();
  std::vector<std::vector<Code>> rows(n, std::vector<Code>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) {
      throw InvalidTableError("column " + std::to_string(c) + " has " + std::to_string(columns[c].size()) +
                              " codes, expected " + std::to_string(n));
    }
    for (std::size_t r = 0; r < n; ++r) rows[r][c] = columns[c][r];
  }
  if (attr_names.empty() && n == 0) {
    for (std::size_t a = 0; a < columns.size(); ++a) attr_names.push_back("a" + std::to_string(a));
  }
  return DecisionTable(std::move(rows), std::move(decisions), std::move(attr_names), std::move(decision_name));
}

void DecisionTable::check_subset(const AttributeSubset& attrs) const {
  if (attrs.bound() > num_attrs_) {
    throw InvalidSubsetError("attribute index " + std::to_string(attrs.bound() - 1) + " out of range for " +
                             std::to_string(num_attrs_) + " condition attributes");
  }
}

void DecisionTable::check_objects(const ObjectSet& objects) const {
  if (objects.bound() > num_objects()) {
    throw InvalidSubsetError("object index " + std::to_string(objects.bound() - 1) + " out of range for " +
                             std::to_string(num_objects()) + " objects");
  }
}

BlockLabels block_labels(const DecisionTable& table, const AttributeSubset& attrs) {
  table.check_subset(attrs);
  const std::size_t n = table.num_objects();
  BlockLabels out;
  out.label.assign(n, 0);
  out.num_blocks = n == 0 ? 0 : 1;

  // Refine one attribute at a time: objects stay together iff they shared a
  // block and agree on the new attribute.
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  ids.reserve(2 * n);
  std::vector<std::uint32_t> next(n);
  for (std::size_t attr : attrs) {
    ids.clear();
    for (std::size_t x = 0; x < n; ++x) {
      const std::uint64_t key = (static_cast<std::uint64_t>(out.label[x]) << 32) | table.value(x, attr);
      auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
      next[x] = it->second;
    }
    out.label.swap(next);
    out.num_blocks = ids.size();
  }
  return out;
}

namespace {

Partition from_labels(const BlockLabels& labels) {
  Partition p;
  p.blocks.resize(labels.num_blocks);
  for (std::size_t x = 0; x < labels.label.size(); ++x) p.blocks[labels.label[x]].push_back(x);
  return p;
}

// Whether each block is contained in a single decision class.
std::vector<bool> pure_blocks(const DecisionTable& table, const BlockLabels& labels) {
  std::vector<bool> pure(labels.num_blocks, true);
  std::vector<Code> first(labels.num_blocks, 0);
  std::vector<bool> seen(labels.num_blocks, false);
  for (std::size_t x = 0; x < labels.label.size(); ++x) {
    const auto b = labels.label[x];
    if (!seen[b]) {
      seen[b] = true;
      first[b] = table.decision(x);
    } else if (first[b] != table.decision(x)) {
      pure[b] = false;
    }
  }
  return pure;
}

ObjectSet collect(const BlockLabels& labels, const std::vector<bool>& keep_block) {
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < labels.label.size(); ++x) {
    if (keep_block[labels.label[x]]) members.push_back(x);
  }
  return ObjectSet(std::move(members));
}

}  // namespace

Partition partition(const DecisionTable& table, const AttributeSubset& attrs) {
  return from_labels(block_labels(table, attrs));
}

Partition decision_partition(const DecisionTable& table) {
  BlockLabels labels;
  labels.label.resize(table.num_objects());
  std::vector<std::int64_t> id_of_code(table.decision_cardinality(), -1);
  for (std::size_t x = 0; x < table.num_objects(); ++x) {
    auto& id = id_of_code[table.decision(x)];
    if (id < 0) id = static_cast<std::int64_t>(labels.num_blocks++);
    labels.label[x] = static_cast<std::uint32_t>(id);
  }
  return from_labels(labels);
}

Partition refine(const Partition& a, const Partition& b, std::size_t num_objects) {
  std::vector<std::uint32_t> in_a(num_objects), in_b(num_objects);
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    for (std::size_t x : a.blocks[i]) in_a.at(x) = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < b.blocks.size(); ++i)
    for (std::size_t x : b.blocks[i]) in_b.at(x) = static_cast<std::uint32_t>(i);

  BlockLabels labels;
  labels.label.resize(num_objects);
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  for (std::size_t x = 0; x < num_objects; ++x) {
    const std::uint64_t key = (static_cast<std::uint64_t>(in_a[x]) << 32) | in_b[x];
    labels.label[x] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  labels.num_blocks = ids.size();
  return from_labels(labels);
}

ObjectSet lower_approx(const DecisionTable& table, const AttributeSubset& attrs, const ObjectSet& target) {
  table.check_objects(target);
  const BlockLabels labels = block_labels(table, attrs);
  std::vector<bool> inside(labels.num_blocks, true);
  for (std::size_t x = 0; x < labels.label.size(); ++x) {
    if (!target.contains(x)) inside[labels.label[x]] = false;
  }
  return collect(labels, inside);
}

ObjectSet upper_approx(const DecisionTable& table, const AttributeSubset& attrs, const ObjectSet& target) {
  table.check_objects(target);
  const BlockLabels labels = block_labels(table, attrs);
  std::vector<bool> touches(labels.num_blocks, false);
  for (std::size_t x : target) touches[labels.label[x]] = true;
  return collect(labels, touches);
}

Regions regions(const DecisionTable& table, const AttributeSubset& attrs) {
  const BlockLabels labels = block_labels(table, attrs);
  const std::vector<bool> pure = pure_blocks(table, labels);

  // Every object lies in some decision class, so the union of upper
  // approximations is U and the negative region is empty. It is still
  // computed from its definition.
  std::vector<bool> in_some_upper(labels.num_blocks, false);
  for (const auto& cls : decision_partition(table).blocks)
    for (std::size_t x : cls) in_some_upper[labels.label[x]] = true;

  Regions r;
  r.positive = collect(labels, pure);
  std::vector<bool> boundary(labels.num_blocks), negative(labels.num_blocks);
  for (std::size_t b = 0; b < labels.num_blocks; ++b) {
    boundary[b] = in_some_upper[b] && !pure[b];
    negative[b] = !in_some_upper[b];
  }
  r.boundary = collect(labels, boundary);
  r.negative = collect(labels, negative);
  return r;
}

DependencyRatio dependency_ratio(const DecisionTable& table, const AttributeSubset& attrs) {
  if (table.num_objects() == 0) throw InvalidTableError("dependency of an empty table is undefined");
  const BlockLabels labels = block_labels(table, attrs);
  const std::vector<bool> pure = pure_blocks(table, labels);
  std::size_t positive = 0;
  for (std::size_t x = 0; x < labels.label.size(); ++x) positive += pure[labels.label[x]] ? 1 : 0;
  return {positive, table.num_objects()};
}

double dependency(const DecisionTable& table, const AttributeSubset& attrs) {
  return dependency_ratio(table, attrs).value();
}

double entropy(const DecisionTable& table, const AttributeSubset& attrs) {
  const std::size_t n = table.num_objects();
  if (n == 0) throw InvalidTableError("entropy of an empty table is undefined");
  const BlockLabels labels = block_labels(table, attrs);
  const std::size_t k = table.decision_cardinality();
  std::vector<std::size_t> counts(labels.num_blocks * k, 0);
  std::vector<std::size_t> block_size(labels.num_blocks, 0);
  for (std::size_t x = 0; x < n; ++x) {
    ++counts[labels.label[x] * k + table.decision(x)];
    ++block_size[labels.label[x]];
  }
  double e = 0.0;
  for (std::size_t b = 0; b < labels.num_blocks; ++b) {
    const double size = static_cast<double>(block_size[b]);
    double h = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t cnt = counts[b * k + c];
      if (cnt == 0 || cnt == block_size[b]) continue;  // 0 log 0 = 0, 1 log 1 = 0
      const double p = static_cast<double>(cnt) / size;
      h -= p * std::log2(p);
    }
    e += (size / static_cast<double>(n)) * h;
  }
  return e;
}

}  // namespace rsar
