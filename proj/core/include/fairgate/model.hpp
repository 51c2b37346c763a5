#pragma once

#include <ostream>
#include <vector>

#include "fairgate/design.hpp"

namespace fairgate {

enum class ModelKind { Linear, Logistic };

struct FitConfig {
  int max_iterations = 50;
  double tolerance = 1e-8;     // gradient inf-norm (mean log-likelihood scale)
  double ridge_jitter = 1e-10; // added to the normal-matrix diagonal on
                               // factorization failure
  double threshold = 0.5;      // classification cutoff on the probability scale
  bool pseudo_inverse = false; // allow rank-deficient designs (min-norm solve)
};

/// A fitted regression model: coefficients and standard errors aligned with
/// the design's column descriptors.
struct ModelFit {
  ModelKind kind = ModelKind::Linear;
  std::vector<ColumnDesc> columns;
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  double sigma2 = 0.0;  // residual variance (linear fits only)
  std::size_t n = 0;    // rows
  std::size_t p = 0;    // columns used (including intercept)
  bool converged = false;
  int iterations = 0;

  double coefficient(const std::string& display_name) const;
  double std_error(const std::string& display_name) const;

  /// Text report in the (feature, coefficient, se) layout of the paper's
  /// tables.
  void write_report(std::ostream& os) const;
};

}  // namespace fairgate
