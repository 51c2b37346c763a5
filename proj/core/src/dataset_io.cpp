#include "fairgate/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "fairgate/errors.hpp"

namespace fairgate {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& s, const std::string& label,
                    std::size_t line_no) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DataError("line " + std::to_string(line_no) + ": feature '" + label +
                    "': not a number: '" + s + "'");
  return v;
}

}  // namespace

Schema read_schema_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open schema file: " + path);
  std::vector<Feature> feats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ss(t);
    std::string word, label, kind;
    ss >> word >> label >> kind;
    if (word != "feature" || label.empty() || kind.empty())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": expected 'feature <label> <kind> ...'");
    Feature f;
    f.label = label;
    if (kind == "numeric") {
      f.kind = FeatureKind::Numeric;
    } else if (kind == "categorical") {
      f.kind = FeatureKind::Categorical;
      std::string rest;
      std::getline(ss, rest);
      rest = trim(rest);
      if (!rest.empty()) {
        for (const auto& lev : split_csv(rest))
          if (!lev.empty()) f.levels.push_back(lev);
        std::sort(f.levels.begin(), f.levels.end());
      }
    } else if (kind == "target") {
      f.kind = FeatureKind::BinaryTarget;
      std::string pos;
      ss >> pos;
      if (pos.empty())
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": target needs a positive level");
      f.levels = {pos};
    } else {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": unknown kind '" + kind + "'");
    }
    feats.push_back(std::move(f));
  }
  if (feats.empty()) throw DataError(path + ": no features declared");
  return Schema(std::move(feats));
}

void write_schema_file(const Schema& schema, const std::string& path,
                       const std::string& positive_level) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write schema file: " + path);
  for (const auto& f : schema.features()) {
    switch (f.kind) {
      case FeatureKind::Numeric:
        out << "feature " << f.label << " numeric\n";
        break;
      case FeatureKind::Categorical: {
        out << "feature " << f.label << " categorical ";
        for (std::size_t i = 0; i < f.levels.size(); ++i)
          out << (i ? "," : "") << f.levels[i];
        out << "\n";
        break;
      }
      case FeatureKind::BinaryTarget:
        out << "feature " << f.label << " target "
            << (f.levels.empty() ? positive_level : f.levels[0]) << "\n";
        break;
    }
  }
}

Schema adult_schema() {
  // Levels are left open and inferred from the loaded rows, so that the
  // encoded feature set reflects the complete-case subset (Never-worked, for
  // example, never survives the missing-row drop in the training file).
  auto cat = [](const char* label) {
    return Feature{label, FeatureKind::Categorical, {}};
  };
  auto num = [](const char* label) {
    return Feature{label, FeatureKind::Numeric, {}};
  };
  std::vector<Feature> feats = {
      num("age"),
      cat("workclass"),
      num("fnlwgt"),
      cat("education"),
      num("education-num"),
      cat("marital-status"),
      cat("occupation"),
      cat("relationship"),
      cat("race"),
      cat("sex"),
      num("capital-gain"),
      num("capital-loss"),
      num("hours-per-week"),
      cat("native-country"),
      Feature{"income", FeatureKind::BinaryTarget, {">50K"}},
  };
  return Schema(std::move(feats));
}

Dataset load_csv(const std::string& path, const Schema& schema,
                 const std::string& missing_token) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);

  const auto& feats = schema.features();
  int target_idx = schema.target_index();
  if (target_idx < 0) throw UsageError("load: schema has no target feature");
  const std::string positive = feats[target_idx].levels.empty()
                                   ? std::string(">50K")
                                   : feats[target_idx].levels[0];

  // For features with declared levels, build level lookup; otherwise collect
  // raw strings and assign sorted indices afterwards.
  std::vector<std::map<std::string, std::int32_t>> lookup(feats.size());
  std::vector<bool> fixed(feats.size(), false);
  for (std::size_t i = 0; i < feats.size(); ++i) {
    if (feats[i].kind == FeatureKind::Categorical && !feats[i].levels.empty()) {
      fixed[i] = true;
      for (std::size_t j = 0; j < feats[i].levels.size(); ++j)
        lookup[i][feats[i].levels[j]] = static_cast<std::int32_t>(j);
    }
  }

  std::vector<std::vector<double>> nums;
  std::vector<std::vector<std::int32_t>> levs;
  std::vector<int> num_slot(feats.size(), -1), lev_slot(feats.size(), -1);
  for (std::size_t i = 0; i < feats.size(); ++i) {
    if (feats[i].kind == FeatureKind::Numeric) {
      num_slot[i] = static_cast<int>(nums.size());
      nums.emplace_back();
    } else if (feats[i].kind == FeatureKind::Categorical) {
      lev_slot[i] = static_cast<int>(levs.size());
      levs.emplace_back();
    }
  }
  std::vector<std::uint8_t> target;

  std::string line;
  std::size_t line_no = 0, parsed = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '|') continue;  // adult.test banner line
    auto fields = split_csv(t);
    if (fields.size() != feats.size())
      throw DataError(path + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(feats.size()) + " fields, got " +
                      std::to_string(fields.size()));
    bool missing = false;
    for (const auto& f : fields)
      if (f == missing_token) { missing = true; break; }
    if (missing) continue;

    for (std::size_t i = 0; i < feats.size(); ++i) {
      switch (feats[i].kind) {
        case FeatureKind::Numeric:
          nums[num_slot[i]].push_back(parse_double(fields[i], feats[i].label, line_no));
          break;
        case FeatureKind::Categorical: {
          auto it = lookup[i].find(fields[i]);
          if (it == lookup[i].end()) {
            if (fixed[i])
              throw DataError(path + ":" + std::to_string(line_no) +
                              ": unknown level '" + fields[i] +
                              "' for feature '" + feats[i].label + "'");
            std::int32_t next = static_cast<std::int32_t>(lookup[i].size());
            it = lookup[i].emplace(fields[i], next).first;
          }
          levs[lev_slot[i]].push_back(it->second);
          break;
        }
        case FeatureKind::BinaryTarget: {
          std::string v = fields[i];
          if (!v.empty() && v.back() == '.') v.pop_back();  // adult.test labels
          target.push_back(v == positive ? 1 : 0);
          break;
        }
      }
    }
    ++parsed;
  }
  if (parsed == 0) throw DataError(path + ": no data rows");

  // Freeze inferred levels in sorted order and remap indices.
  std::vector<Feature> out_feats = feats;
  for (std::size_t i = 0; i < feats.size(); ++i) {
    if (feats[i].kind != FeatureKind::Categorical || fixed[i]) continue;
    std::vector<std::string> sorted_levels;
    sorted_levels.reserve(lookup[i].size());
    for (const auto& [name, idx] : lookup[i]) sorted_levels.push_back(name);
    // std::map iterates in sorted key order already
    std::vector<std::int32_t> remap(lookup[i].size());
    for (std::size_t j = 0; j < sorted_levels.size(); ++j)
      remap[lookup[i][sorted_levels[j]]] = static_cast<std::int32_t>(j);
    for (auto& v : levs[lev_slot[i]]) v = remap[v];
    if (sorted_levels.size() < 2)
      throw DataError(path + ": categorical feature '" + feats[i].label +
                      "' has fewer than two observed levels");
    out_feats[i].levels = std::move(sorted_levels);
  }

  return Dataset(Schema(std::move(out_feats)), std::move(nums), std::move(levs),
                 std::move(target));
}

Dataset load_adult(const std::string& path, const std::string& missing_token) {
  return load_csv(path, adult_schema(), missing_token);
}

Dataset recode_marital(const Dataset& d) {
  static const std::string kLabel = "marital-status";
  if (!d.schema().has(kLabel))
    throw DataError("recode: feature '" + kLabel + "' absent");
  const Feature& old = d.schema().feature(kLabel);
  if (old.kind != FeatureKind::Categorical)
    throw DataError("recode: '" + kLabel + "' is not categorical");

  // Married-* levels collapse to Married, everything else to Unmarried.
  std::vector<std::int32_t> level_map(old.levels.size());
  for (std::size_t i = 0; i < old.levels.size(); ++i)
    level_map[i] = old.levels[i].rfind("Married-", 0) == 0 ? 0 : 1;

  std::vector<Feature> feats = d.schema().features();
  std::size_t fi = d.schema().index_of(kLabel);
  feats[fi].levels = {"Married", "Unmarried"};

  std::vector<std::vector<double>> nums;
  std::vector<std::vector<std::int32_t>> levs;
  for (const auto& f : d.schema().features()) {
    if (f.kind == FeatureKind::Numeric) {
      nums.push_back(d.numeric_column(f.label));
    } else if (f.kind == FeatureKind::Categorical) {
      if (f.label == kLabel) {
        std::vector<std::int32_t> recoded(d.row_count());
        const auto& src = d.level_column(kLabel);
        for (std::size_t r = 0; r < src.size(); ++r)
          recoded[r] = level_map[src[r]];
        levs.push_back(std::move(recoded));
      } else {
        levs.push_back(d.level_column(f.label));
      }
    }
  }
  return Dataset(Schema(std::move(feats)), std::move(nums), std::move(levs),
                 d.target());
}

std::vector<std::string> adult_study_features() {
  return {"workclass",    "education",    "education-num", "marital-status",
          "occupation",   "relationship", "hours-per-week", "native-country"};
}

FeaturePartition adult_default_partition() {
  FeaturePartition p;
  p.sensitive = {"age"};
  auto study = adult_study_features();
  p.unprotected.insert(study.begin(), study.end());
  p.protected_ = {"fnlwgt", "race", "sex", "capital-gain", "capital-loss"};
  return p;
}

}  // namespace fairgate
