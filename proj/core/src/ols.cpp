#include <Eigen/Dense>
#include <Eigen/SVD>

#include "fairgate/errors.hpp"
#include "fairgate/regress.hpp"

namespace fairgate {

namespace {

bool is_binary01(const Eigen::VectorXd& y) {
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (y(i) != 0.0 && y(i) != 1.0) return false;
  return true;
}

}  // namespace

ModelFit fit_ols(const DesignMatrix& design, const FitConfig& cfg) {
  const Eigen::MatrixXd& X = design.values;
  const auto n = X.rows();
  const auto p = X.cols();
  if (n <= p)
    throw NumericError("fit_ols: need more rows than columns (n=" +
                       std::to_string(n) + ", p=" + std::to_string(p) + ")");

  Eigen::VectorXd y = design.target;
  if (is_binary01(y)) y = 2.0 * y.array() - 1.0;  // +-1 response scale

  Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::VectorXd xty = X.transpose() * y;

  Eigen::VectorXd beta;
  Eigen::VectorXd inv_diag(p);
  if (cfg.pseudo_inverse) {
    // Min-norm solve through the eigendecomposition of X^T X; doubles as the
    // pseudo-inverse diagonal for the standard errors.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(xtx);
    if (eig.info() != Eigen::Success)
      throw NumericError("fit_ols: eigendecomposition failed");
    const Eigen::VectorXd& ev = eig.eigenvalues();
    const Eigen::MatrixXd& V = eig.eigenvectors();
    double cutoff = ev.cwiseAbs().maxCoeff() * 1e-10;
    Eigen::VectorXd inv_ev(p);
    for (Eigen::Index i = 0; i < p; ++i)
      inv_ev(i) = ev(i) > cutoff ? 1.0 / ev(i) : 0.0;
    beta = V * (inv_ev.asDiagonal() * (V.transpose() * xty));
    for (Eigen::Index j = 0; j < p; ++j)
      inv_diag(j) = (V.row(j).array().square() * inv_ev.transpose().array()).sum();
  } else {
    Eigen::LLT<Eigen::MatrixXd> llt(xtx);
    if (llt.info() != Eigen::Success)
      throw NumericError(
          "fit_ols: X^T X is not positive definite (rank-deficient design); "
          "enable pseudo_inverse mode to fit anyway");
    beta = llt.solve(xty);
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(p, p));
    inv_diag = inv.diagonal();
  }

  Eigen::VectorXd resid = y - X * beta;
  double rss = resid.squaredNorm();
  double sigma2 = rss / static_cast<double>(n - p);

  ModelFit fit;
  fit.kind = ModelKind::Linear;
  fit.columns = design.columns;
  fit.coefficients.assign(beta.data(), beta.data() + p);
  fit.std_errors.resize(p);
  for (Eigen::Index j = 0; j < p; ++j)
    fit.std_errors[j] = std::sqrt(std::max(0.0, sigma2 * inv_diag(j)));
  fit.sigma2 = sigma2;
  fit.n = static_cast<std::size_t>(n);
  fit.p = static_cast<std::size_t>(p);
  fit.converged = true;
  fit.iterations = 1;
  return fit;
}

double ModelFit::coefficient(const std::string& display_name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].display_name() == display_name) return coefficients[i];
  throw UsageError("model: no column '" + display_name + "'");
}

double ModelFit::std_error(const std::string& display_name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].display_name() == display_name) return std_errors[i];
  throw UsageError("model: no column '" + display_name + "'");
}

}  // namespace fairgate
