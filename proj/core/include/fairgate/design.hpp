#pragma once

#include <Eigen/Dense>
#include <ostream>
#include <string>
#include <vector>

#include "fairgate/schema.hpp"

namespace fairgate {

/// Provenance of one design-matrix column.
struct ColumnDesc {
  std::string source;  // schema feature label ("" for the intercept)
  std::string level;   // dummy level ("" for numeric / intercept)
  bool is_intercept = false;

  std::string display_name() const;
  bool operator==(const ColumnDesc& o) const;
};

enum class DropPolicy {
  AlphaFirst,  // drop the alphabetically first level (default)
  None,        // keep all levels (full-rank callers only)
};

/// Numeric design matrix: N x (p+1) with a leading all-ones intercept
/// column, plus per-column provenance and the 0/1 target vector.
struct DesignMatrix {
  Eigen::MatrixXd values;
  std::vector<ColumnDesc> columns;
  Eigen::VectorXd target;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values.cols()); }
  int column_index(const std::string& display_name) const;
};

/// One-hot encode `d` over the feature labels in `order` (subset of the
/// schema, schema order enforced). Numeric features are copied verbatim;
/// each categorical feature with m levels expands to m-1 dummies under
/// DropPolicy::AlphaFirst. An intercept column is prepended.
DesignMatrix encode(const Dataset& d, const std::vector<std::string>& order,
                    DropPolicy policy = DropPolicy::AlphaFirst);

/// Encode over all non-target features in schema order.
DesignMatrix encode(const Dataset& d, DropPolicy policy = DropPolicy::AlphaFirst);

/// CSV export with a header row (debugging aid).
void write_design_csv(const DesignMatrix& m, std::ostream& os);

}  // namespace fairgate
