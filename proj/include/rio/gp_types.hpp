#pragma once

#include <Eigen/Core>

namespace rio {

/// Joint (x, yhat) coordinates the composite kernel operates on. `yhat` may
/// be all zeros when the output kernel is inactive.
struct GpPoints {
  Eigen::MatrixXd x;     // n x d
  Eigen::VectorXd yhat;  // n

  GpPoints() = default;
  GpPoints(Eigen::MatrixXd x_, Eigen::VectorXd yhat_)
      : x(std::move(x_)), yhat(std::move(yhat_)) {}

  Eigen::Index size() const { return x.rows(); }
  Eigen::Index dim() const { return x.cols(); }

  GpPoints row(Eigen::Index i) const {
    return GpPoints(x.row(i), yhat.segment(i, 1));
  }
};

/// One-point Gaussian prediction. Outcome variance includes the fitted noise.
struct PredictiveGaussian {
  double mean = 0.0;
  double latent_variance = 0.0;
  double outcome_variance = 0.0;
};

/// Column-aligned batch of predictions.
struct PredictiveBatch {
  Eigen::VectorXd mean;
  Eigen::VectorXd latent_variance;
  Eigen::VectorXd outcome_variance;

  Eigen::Index size() const { return mean.size(); }
  PredictiveGaussian at(Eigen::Index i) const {
    return {mean[i], latent_variance[i], outcome_variance[i]};
  }
};

}  // namespace rio
