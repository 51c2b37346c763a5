#include "fairgate/design.hpp"

#include <iomanip>

#include "fairgate/errors.hpp"

namespace fairgate {

std::string ColumnDesc::display_name() const {
  if (is_intercept) return "(intercept)";
  return level.empty() ? source : level;
}

bool ColumnDesc::operator==(const ColumnDesc& o) const {
  return source == o.source && level == o.level && is_intercept == o.is_intercept;
}

int DesignMatrix::column_index(const std::string& display_name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].display_name() == display_name) return static_cast<int>(i);
  return -1;
}

DesignMatrix encode(const Dataset& d, const std::vector<std::string>& order,
                    DropPolicy policy) {
  if (d.schema().target_index() < 0)
    throw UsageError("encode: dataset has no designated target");

  const auto N = static_cast<Eigen::Index>(d.row_count());
  std::vector<ColumnDesc> cols;
  cols.push_back({"", "", true});

  // First pass: count columns.
  for (const auto& label : order) {
    const Feature& f = d.schema().feature(label);
    if (f.kind == FeatureKind::Numeric) {
      cols.push_back({label, "", false});
    } else if (f.kind == FeatureKind::Categorical) {
      if (f.levels.size() < 2)
        throw DataError("encode: categorical feature '" + label +
                        "' has fewer than two levels");
      std::size_t first = policy == DropPolicy::AlphaFirst ? 1 : 0;
      for (std::size_t j = first; j < f.levels.size(); ++j)
        cols.push_back({label, f.levels[j], false});
    } else {
      throw UsageError("encode: target feature '" + label +
                       "' cannot be encoded");
    }
  }

  DesignMatrix m;
  m.values.setZero(N, static_cast<Eigen::Index>(cols.size()));
  m.values.col(0).setOnes();
  Eigen::Index c = 1;
  for (const auto& label : order) {
    const Feature& f = d.schema().feature(label);
    if (f.kind == FeatureKind::Numeric) {
      const auto& col = d.numeric_column(label);
      for (Eigen::Index r = 0; r < N; ++r) m.values(r, c) = col[r];
      ++c;
    } else {
      const auto& col = d.level_column(label);
      std::size_t first = policy == DropPolicy::AlphaFirst ? 1 : 0;
      Eigen::Index base = c;
      for (Eigen::Index r = 0; r < N; ++r) {
        std::int32_t lev = col[r];
        if (static_cast<std::size_t>(lev) >= first)
          m.values(r, base + lev - static_cast<std::int32_t>(first)) = 1.0;
      }
      c += static_cast<Eigen::Index>(f.levels.size() - first);
    }
  }
  m.columns = std::move(cols);
  m.target.resize(N);
  const auto& t = d.target();
  for (Eigen::Index r = 0; r < N; ++r) m.target(r) = t[r];
  return m;
}

DesignMatrix encode(const Dataset& d, DropPolicy policy) {
  std::vector<std::string> order;
  for (const auto& f : d.schema().features())
    if (f.kind != FeatureKind::BinaryTarget) order.push_back(f.label);
  return encode(d, order, policy);
}

void write_design_csv(const DesignMatrix& m, std::ostream& os) {
  for (std::size_t i = 0; i < m.columns.size(); ++i)
    os << (i ? "," : "") << m.columns[i].display_name();
  os << ",target\n";
  os << std::setprecision(17);
  for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.values.cols(); ++c)
      os << (c ? "," : "") << m.values(r, c);
    os << "," << m.target(r) << "\n";
  }
}

}  // namespace fairgate
