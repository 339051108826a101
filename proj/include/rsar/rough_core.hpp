#pragma once

// Rough-set primitives over integer-coded decision tables: indiscernibility
// partitions, lower/upper approximations, positive/negative/boundary regions,
// the dependency degree and conditional entropy.
//
// Everything here is a pure function of immutable inputs.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rsar {

using Code = std::uint32_t;

// Sorted, duplicate-free set of indices. Tag distinguishes attribute sets
// from object sets at compile time.
template <typename Tag>
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices) : IndexSet(std::vector<std::size_t>(indices)) {}
  explicit IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  // {0, 1, ..., n-1}.
  static IndexSet range(std::size_t n) {
    IndexSet s;
    s.indices_.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.indices_[i] = i;
    return s;
  }

  // Positions holding a nonzero value.
  static IndexSet from_mask(std::span<const std::uint8_t> mask) {
    IndexSet s;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i] != 0) s.indices_.push_back(i);
    }
    return s;
  }

  std::vector<std::uint8_t> to_mask(std::size_t n) const {
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t i : indices_) mask.at(i) = 1;
    return mask;
  }

  bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  void insert(std::size_t i) {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
    if (it == indices_.end() || *it != i) indices_.insert(it, i);
  }

  IndexSet with(std::size_t i) const {
    IndexSet copy = *this;
    copy.insert(i);
    return copy;
  }

  bool is_subset_of(const IndexSet& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
  }

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::span<const std::size_t> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  // Largest index + 1, or 0 for the empty set.
  std::size_t bound() const { return indices_.empty() ? 0 : indices_.back() + 1; }

  // "{0,2,5}".
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(indices_[k]);
    }
    out += '}';
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // Lexicographic on the sorted index sequence.
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<std::size_t> indices_;
};

struct AttributeTag {};
struct ObjectTag {};

using AttributeSubset = IndexSet<AttributeTag>;
using ObjectSet = IndexSet<ObjectTag>;

// Objects x condition attributes matrix of categorical codes plus a decision
// column. Codes in every column are dense: each column with cardinality k uses
// exactly the codes 0..k-1.
class DecisionTable {
 public:
  DecisionTable() = default;

  // Throws InvalidTableError on ragged rows, non-dense codes, or a decision
  // column whose length differs from the row count. An empty attr_names
  // generates "a0", "a1", ...
  DecisionTable(std::vector<std::vector<Code>> rows, std::vector<Code> decisions,
                std::vector<std::string> attr_names = {}, std::string decision_name = "d");

  // Column-wise construction; every column must have the same length.
  static DecisionTable from_columns(const std::vector<std::vector<Code>>& columns, std::vector<Code> decisions,
                                    std::vector<std::string> attr_names = {}, std::string decision_name = "d");

  std::size_t num_objects() const { return decisions_.size(); }
  std::size_t num_condition_attrs() const { return num_attrs_; }

  Code value(std::size_t object, std::size_t attr) const { return values_[object * num_attrs_ + attr]; }
  std::span<const Code> row(std::size_t object) const {
    return {values_.data() + object * num_attrs_, num_attrs_};
  }
  Code decision(std::size_t object) const { return decisions_[object]; }
  std::span<const Code> decisions() const { return decisions_; }

  std::size_t cardinality(std::size_t attr) const { return cardinalities_.at(attr); }
  std::size_t decision_cardinality() const { return decision_cardinality_; }

  const std::vector<std::string>& attr_names() const { return attr_names_; }
  const std::string& decision_name() const { return decision_name_; }

  AttributeSubset all_attributes() const { return AttributeSubset::range(num_attrs_); }

  // Throws InvalidSubsetError when an index is >= num_condition_attrs().
  void check_subset(const AttributeSubset& attrs) const;
  void check_objects(const ObjectSet& objects) const;

 private:
  std::size_t num_attrs_ = 0;
  std::vector<Code> values_;  // row-major
  std::vector<Code> decisions_;
  std::vector<std::size_t> cardinalities_;
  std::size_t decision_cardinality_ = 0;
  std::vector<std::string> attr_names_;
  std::string decision_name_ = "d";
};

// U/IND(P). Blocks are ordered by their smallest member and each block lists
// its members in ascending order, so equal partitions compare equal.
struct Partition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Exact |POS| / |U|. Comparisons cross-multiply, so equal ratios with
// different denominators compare equal and no floating-point ties arise.
__extension__ typedef unsigned __int128 Wide;

struct DependencyRatio {
  std::size_t positive = 0;
  std::size_t universe = 1;

  double value() const { return static_cast<double>(positive) / static_cast<double>(universe); }

  friend bool operator==(const DependencyRatio& a, const DependencyRatio& b) {
    return static_cast<Wide>(a.positive) * b.universe ==
           static_cast<Wide>(b.positive) * a.universe;
  }
  friend std::strong_ordering operator<=>(const DependencyRatio& a, const DependencyRatio& b) {
    const auto lhs = static_cast<Wide>(a.positive) * b.universe;
    const auto rhs = static_cast<Wide>(b.positive) * a.universe;
    return lhs <=> rhs;
  }
};

struct Regions {
  ObjectSet positive;
  ObjectSet negative;
  ObjectSet boundary;
};

// Per-object block labels of U/IND(attrs), numbered 0.. in order of first
// appearance. The building block for the rest of this header.
struct BlockLabels {
  std::vector<std::uint32_t> label;
  std::size_t num_blocks = 0;
};

BlockLabels block_labels(const DecisionTable& table, const AttributeSubset& attrs);

Partition partition(const DecisionTable& table, const AttributeSubset& attrs);
Partition decision_partition(const DecisionTable& table);

// Refinement product A (x) B = { X n Y : X in A, Y in B, X n Y != {} }.
Partition refine(const Partition& a, const Partition& b, std::size_t num_objects);

ObjectSet lower_approx(const DecisionTable& table, const AttributeSubset& attrs, const ObjectSet& target);
ObjectSet upper_approx(const DecisionTable& table, const AttributeSubset& attrs, const ObjectSet& target);

Regions regions(const DecisionTable& table, const AttributeSubset& attrs);

// gamma_attrs(D). Throws InvalidTableError on a table with no objects.
DependencyRatio dependency_ratio(const DecisionTable& table, const AttributeSubset& attrs);
double dependency(const DecisionTable& table, const AttributeSubset& attrs);

// Conditional entropy of the decision given the blocks of U/IND(attrs), in
// bits. Throws InvalidTableError on a table with no objects.
double entropy(const DecisionTable& table, const AttributeSubset& attrs);

// Absolute tolerance for entropy equality tests.
inline constexpr double kEntropyTolerance = 1e-12;

}  // namespace rsar
