#pragma once

#include "fairgate/design.hpp"
#include "fairgate/model.hpp"

namespace fairgate {

/// Ordinary least squares with per-coefficient standard errors.
///
/// Binary 0/1 targets are mapped to -1/+1 for the solve, so the reported
/// coefficients live on the +-1 response scale; predictions convert back to
/// the probability scale via (score + 1) / 2. Standard errors are
/// sqrt(sigma2 * [(X^T X)^-1]_jj) with sigma2 = RSS / (N - p).
///
/// Throws NumericError on rank deficiency unless cfg.pseudo_inverse is set,
/// in which case the minimum-norm solution is returned and the pseudo-inverse
/// diagonal feeds the standard errors.
ModelFit fit_ols(const DesignMatrix& design, const FitConfig& cfg = {});

/// Logistic regression via iteratively reweighted least squares (Newton
/// steps on the mean log-likelihood), standard errors from the inverse
/// Fisher information at the optimum. `converged` reflects the gradient
/// inf-norm dropping below cfg.tolerance within cfg.max_iterations; a
/// non-converged fit is returned with its last iterate, not hidden.
ModelFit fit_logistic(const DesignMatrix& design, const FitConfig& cfg = {});

/// Fraction of rows whose thresholded prediction equals the 0/1 target.
/// Linear fits score (x.beta + 1)/2, logistic fits score sigmoid(x.beta);
/// both compare against cfg-threshold stored at fit time (0.5 default).
double accuracy(const ModelFit& fit, const DesignMatrix& design,
                double threshold = 0.5);

}  // namespace fairgate
