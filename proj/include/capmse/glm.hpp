#ifndef CAPMSE_GLM_HPP
#define CAPMSE_GLM_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "capmse/design.hpp"
#include "capmse/errors.hpp"
#include "capmse/model_spec.hpp"
#include "capmse/table.hpp"

namespace capmse {

/// A fitted fixed-effects Poisson loglinear model.
struct FixedFit {
  Eigen::VectorXd coefficients;
  std::vector<std::string> coefficient_names;
  Eigen::VectorXd fitted_means;
  std::vector<CellRef> cells;
  double deviance = 0.0;
  bool converged = false;
  int iterations = 0;
  Parameterization parameterization = Parameterization::CornerPoint;
  std::vector<double> deviance_trace;

  double coefficient(const std::string& name) const;
  bool has_coefficient(const std::string& name) const;
};

/// Raised when IRLS hits its iteration cap; carries the last iterate for
/// diagnosis.
class IrlsConvergenceError : public ConvergenceError {
public:
  IrlsConvergenceError(const std::string& what, FixedFit last)
      : ConvergenceError(what), last_(std::move(last)) {}
  const FixedFit& last_iterate() const { return last_; }

private:
  FixedFit last_;
};

/// Poisson deviance 2*sum[n*log(n/mu) - (n - mu)], with n*log(n/mu) read as 0
/// when n is 0.
double poisson_deviance(const Eigen::VectorXd& counts, const Eigen::VectorXd& means);

/// Maximum-likelihood fit by iteratively reweighted least squares.
FixedFit fit_fixed(const StratifiedTable& table, const ModelSpec& spec);

}  // namespace capmse

#endif
