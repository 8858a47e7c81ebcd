#include "capmse/glm.hpp"

#include <algorithm>
#include <cmath>

#include "capmse/errors.hpp"

namespace capmse {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kAbsTol = 1e-10;
constexpr double kRelTol = 1e-12;
constexpr double kConditionLimit = 1e12;

Eigen::VectorXd clamped_exp(const Eigen::VectorXd& eta) {
  return eta.array().min(700.0).exp();
}

}  // namespace

double FixedFit::coefficient(const std::string& name) const {
  for (std::size_t i = 0; i < coefficient_names.size(); ++i)
    if (coefficient_names[i] == name) return coefficients(static_cast<Eigen::Index>(i));
  throw SpecificationError("no coefficient named '" + name + "'");
}

bool FixedFit::has_coefficient(const std::string& name) const {
  return std::find(coefficient_names.begin(), coefficient_names.end(), name) !=
         coefficient_names.end();
}

double poisson_deviance(const Eigen::VectorXd& counts, const Eigen::VectorXd& means) {
  if (counts.size() != means.size())
    throw SpecificationError("deviance: counts and means differ in length");
  double dev = 0.0;
  for (Eigen::Index i = 0; i < counts.size(); ++i) {
    const double n = counts(i);
    const double mu = means(i);
    if (n > 0.0) dev += n * std::log(n / mu);
    dev -= n - mu;
  }
  return 2.0 * dev;
}

FixedFit fit_fixed(const StratifiedTable& table, const ModelSpec& spec) {
  if (spec.is_mixed())
    throw SpecificationError("fit_fixed handles models without random terms");
  DesignMatrix d = design_matrix(spec, table);
  const Eigen::Index p = d.cols();
  const Eigen::VectorXd& n = d.counts;

  {
    // Identifiability is a property of the unweighted design.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.X);
    const Eigen::VectorXd diag = qr.matrixR().diagonal().cwiseAbs();
    if (qr.rank() < p || diag.minCoeff() <= 0.0 ||
        diag.maxCoeff() / diag.minCoeff() > kConditionLimit)
      throw SpecificationError("rank-deficient design matrix (" +
                               std::to_string(static_cast<long>(qr.rank())) + " of " +
                               std::to_string(static_cast<long>(p)) + " identified)");
  }

  FixedFit fit;
  fit.coefficient_names = d.column_labels;
  fit.cells = d.cells;
  fit.parameterization = spec.parameterization;

  Eigen::VectorXd mu = n.array() + 0.5;
  Eigen::VectorXd eta = mu.array().log();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  double dev = poisson_deviance(n, mu);
  fit.deviance_trace.push_back(dev);

  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    const Eigen::VectorXd w = mu.cwiseSqrt();
    const Eigen::VectorXd z = eta + (n - mu).cwiseQuotient(mu);
    const Eigen::MatrixXd xw = w.asDiagonal() * d.X;
    const Eigen::VectorXd zw = w.cwiseProduct(z);
    Eigen::VectorXd beta_new = xw.colPivHouseholderQr().solve(zw);
    if (!beta_new.allFinite())
      throw NumericError("IRLS produced non-finite coefficients at iteration " +
                         std::to_string(iter));

    // Step halving keeps the deviance monotone.
    Eigen::VectorXd eta_new = d.X * beta_new;
    Eigen::VectorXd mu_new = clamped_exp(eta_new);
    double dev_new = poisson_deviance(n, mu_new);
    for (int half = 0; half < 30 && !(dev_new <= dev + 1e-12); ++half) {
      beta_new = 0.5 * (beta_new + beta);
      eta_new = d.X * beta_new;
      mu_new = clamped_exp(eta_new);
      dev_new = poisson_deviance(n, mu_new);
    }

    beta = beta_new;
    eta = eta_new;
    mu = mu_new;
    fit.iterations = iter;
    fit.deviance_trace.push_back(dev_new);

    const double drop = std::abs(dev - dev_new);
    dev = dev_new;
    if (drop < kAbsTol || drop < kRelTol * std::abs(dev)) {
      fit.converged = true;
      break;
    }
  }

  fit.coefficients = beta;
  fit.fitted_means = mu;
  fit.deviance = dev;
  if (!fit.converged)
    throw IrlsConvergenceError("IRLS did not converge in " + std::to_string(kMaxIterations) +
                                   " iterations; last deviance " + std::to_string(dev),
                               fit);
  return fit;
}

}  // namespace capmse
