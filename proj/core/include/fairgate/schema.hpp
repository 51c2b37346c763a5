#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fairgate {

enum class FeatureKind { Numeric, Categorical, BinaryTarget };

/// One feature of a tabular schema. Categorical features carry an ordered
/// list of admissible levels; the level order is the sorted order used by
/// the dummy-drop policy.
struct Feature {
  std::string label;
  FeatureKind kind = FeatureKind::Numeric;
  std::vector<std::string> levels;  // categorical only, sorted ascending
};

/// Ordered feature labels plus their kinds. Labels are unique; categorical
/// features list at least two levels.
class Schema {
public:
  Schema() = default;
  explicit Schema(std::vector<Feature> features);

  const std::vector<Feature>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }

  bool has(const std::string& label) const;
  const Feature& feature(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  /// Index of the single BinaryTarget feature, or -1 if none.
  int target_index() const { return target_index_; }
  std::vector<std::string> labels() const;

  /// New schema restricted to `subset`, preserving original order.
  /// The target feature is kept regardless of membership in `subset`.
  Schema select(const std::set<std::string>& subset) const;

  bool operator==(const Schema& other) const;

private:
  std::vector<Feature> features_;
  std::map<std::string, std::size_t> index_;
  int target_index_ = -1;
};

/// Column-typed immutable dataset. Numeric columns hold doubles, categorical
/// columns hold level indices into the schema's level list, the target column
/// holds 0/1.
class Dataset {
public:
  Dataset() = default;
  Dataset(Schema schema, std::vector<std::vector<double>> numeric_cols,
          std::vector<std::vector<std::int32_t>> level_cols,
          std::vector<std::uint8_t> target);

  const Schema& schema() const { return schema_; }
  std::size_t row_count() const { return row_count_; }

  const std::vector<double>& numeric_column(const std::string& label) const;
  const std::vector<std::int32_t>& level_column(const std::string& label) const;
  const std::vector<std::uint8_t>& target() const { return target_; }

  /// Select operation: same rows, features restricted to `subset`
  /// (original order preserved, target carried along).
  Dataset select(const std::set<std::string>& subset) const;

private:
  Schema schema_;
  // Per schema feature, exactly one of these two holds the column
  // (index into the vectors below).
  std::vector<int> numeric_slot_;
  std::vector<int> level_slot_;
  std::vector<std::vector<double>> numeric_cols_;
  std::vector<std::vector<std::int32_t>> level_cols_;
  std::vector<std::uint8_t> target_;
  std::size_t row_count_ = 0;

  friend Dataset recode_marital(const Dataset& d);
};

/// Partition of the non-target feature labels into sensitive (S_P),
/// unprotected (S_U) and protected (flagged or held out) sets.
struct FeaturePartition {
  std::set<std::string> sensitive;
  std::set<std::string> unprotected;
  std::set<std::string> protected_;

  /// Throws UsageError unless the three sets are disjoint and cover exactly
  /// the non-target labels of `schema`.
  void validate(const Schema& schema) const;
};

}  // namespace fairgate
