#include "fairgate/schema.hpp"

#include <algorithm>

#include "fairgate/errors.hpp"

namespace fairgate {

Schema::Schema(std::vector<Feature> features) : features_(std::move(features)) {
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const Feature& f = features_[i];
    if (f.label.empty()) throw UsageError("schema: empty feature label");
    if (!index_.emplace(f.label, i).second)
      throw UsageError("schema: duplicate feature label '" + f.label + "'");
    if (f.kind == FeatureKind::Categorical && !f.levels.empty() &&
        f.levels.size() < 2)
      throw UsageError("schema: categorical feature '" + f.label +
                       "' lists fewer than two levels");
    if (f.kind == FeatureKind::BinaryTarget) {
      if (target_index_ >= 0)
        throw UsageError("schema: more than one target feature");
      target_index_ = static_cast<int>(i);
    }
  }
}

bool Schema::has(const std::string& label) const {
  return index_.count(label) != 0;
}

const Feature& Schema::feature(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw UsageError("schema: unknown feature '" + label + "'");
  return features_[it->second];
}

std::size_t Schema::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw UsageError("schema: unknown feature '" + label + "'");
  return it->second;
}

std::vector<std::string> Schema::labels() const {
  std::vector<std::string> out;
  out.reserve(features_.size());
  for (const auto& f : features_) out.push_back(f.label);
  return out;
}

Schema Schema::select(const std::set<std::string>& subset) const {
  for (const auto& label : subset)
    if (!has(label)) throw UsageError("select: unknown label '" + label + "'");
  std::vector<Feature> kept;
  for (const auto& f : features_)
    if (f.kind == FeatureKind::BinaryTarget || subset.count(f.label))
      kept.push_back(f);
  return Schema(std::move(kept));
}

bool Schema::operator==(const Schema& other) const {
  if (features_.size() != other.features_.size()) return false;
  for (std::size_t i = 0; i < features_.size(); ++i) {
    const Feature& a = features_[i];
    const Feature& b = other.features_[i];
    if (a.label != b.label || a.kind != b.kind || a.levels != b.levels)
      return false;
  }
  return true;
}

Dataset::Dataset(Schema schema, std::vector<std::vector<double>> numeric_cols,
                 std::vector<std::vector<std::int32_t>> level_cols,
                 std::vector<std::uint8_t> target)
    : schema_(std::move(schema)),
      numeric_cols_(std::move(numeric_cols)),
      level_cols_(std::move(level_cols)),
      target_(std::move(target)) {
  row_count_ = target_.size();
  numeric_slot_.assign(schema_.size(), -1);
  level_slot_.assign(schema_.size(), -1);
  std::size_t ni = 0, li = 0;
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    switch (schema_.features()[i].kind) {
      case FeatureKind::Numeric:
        if (ni >= numeric_cols_.size() || numeric_cols_[ni].size() != row_count_)
          throw UsageError("dataset: numeric column size mismatch");
        numeric_slot_[i] = static_cast<int>(ni++);
        break;
      case FeatureKind::Categorical:
        if (li >= level_cols_.size() || level_cols_[li].size() != row_count_)
          throw UsageError("dataset: categorical column size mismatch");
        level_slot_[i] = static_cast<int>(li++);
        break;
      case FeatureKind::BinaryTarget:
        break;
    }
  }
  if (ni != numeric_cols_.size() || li != level_cols_.size())
    throw UsageError("dataset: extra columns beyond schema");
}

const std::vector<double>& Dataset::numeric_column(const std::string& label) const {
  std::size_t i = schema_.index_of(label);
  if (numeric_slot_[i] < 0)
    throw UsageError("dataset: feature '" + label + "' is not numeric");
  return numeric_cols_[numeric_slot_[i]];
}

const std::vector<std::int32_t>& Dataset::level_column(const std::string& label) const {
  std::size_t i = schema_.index_of(label);
  if (level_slot_[i] < 0)
    throw UsageError("dataset: feature '" + label + "' is not categorical");
  return level_cols_[level_slot_[i]];
}

Dataset Dataset::select(const std::set<std::string>& subset) const {
  Schema sub = schema_.select(subset);
  std::vector<std::vector<double>> nums;
  std::vector<std::vector<std::int32_t>> levs;
  for (const auto& f : sub.features()) {
    if (f.kind == FeatureKind::Numeric)
      nums.push_back(numeric_column(f.label));
    else if (f.kind == FeatureKind::Categorical)
      levs.push_back(level_column(f.label));
  }
  return Dataset(std::move(sub), std::move(nums), std::move(levs), target_);
}

void FeaturePartition::validate(const Schema& schema) const {
  std::set<std::string> all;
  for (const auto& f : schema.features())
    if (f.kind != FeatureKind::BinaryTarget) all.insert(f.label);
  auto check_subset = [&](const std::set<std::string>& s, const char* name) {
    for (const auto& l : s)
      if (!all.count(l))
        throw UsageError(std::string("partition: ") + name +
                         " contains unknown label '" + l + "'");
  };
  check_subset(sensitive, "sensitive");
  check_subset(unprotected, "unprotected");
  check_subset(protected_, "protected");
  std::size_t total = sensitive.size() + unprotected.size() + protected_.size();
  std::set<std::string> joined;
  joined.insert(sensitive.begin(), sensitive.end());
  joined.insert(unprotected.begin(), unprotected.end());
  joined.insert(protected_.begin(), protected_.end());
  if (joined.size() != total)
    throw UsageError("partition: sets are not disjoint");
  if (joined != all)
    throw UsageError("partition: sets do not cover the schema");
}

}  // namespace fairgate
