#pragma once

#include <Eigen/Core>
#include <vector>

#include "rio/gp_types.hpp"

namespace rio {

/// Which parts of the composite kernel are active, and whether the input
/// kernel carries one lengthscale per dimension.
struct KernelSelector {
  bool use_input = true;
  bool use_output = true;
  bool ard = false;

  void validate() const;
};

/// Log-space hyperparameters of the composite kernel plus the observation
/// noise. `log_lengthscale_in` has one entry (isotropic) or d entries (ARD).
struct KernelParams {
  double log_sigma2_in = 0.0;
  Eigen::VectorXd log_lengthscale_in = Eigen::VectorXd::Zero(1);
  double log_sigma2_out = 0.0;
  double log_lengthscale_out = 0.0;
  double log_noise = 0.0;

  double sigma2_in() const { return std::exp(log_sigma2_in); }
  double sigma2_out() const { return std::exp(log_sigma2_out); }
  double lengthscale_out() const { return std::exp(log_lengthscale_out); }
  double noise() const { return std::exp(log_noise); }
  Eigen::VectorXd lengthscale_in() const { return log_lengthscale_in.array().exp(); }

  void validate(const KernelSelector& sel, Eigen::Index dim) const;
};

/// Scalar RBF value sigma2 * exp(-1/2 sum_k (u_k - v_k)^2 / l_k^2).
/// `lengthscale` is broadcast when it has a single entry.
double rbf_eval(double sigma2, const Eigen::VectorXd& lengthscale,
                const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// Composite kernel value at one pair of joint points.
double composite_eval(const KernelParams& params, const KernelSelector& sel,
                      const Eigen::VectorXd& x_i, double yhat_i,
                      const Eigen::VectorXd& x_j, double yhat_j);

/// Input/output kernel matrices kept separate for gradient reuse.
struct GramParts {
  Eigen::MatrixXd input;   // empty when the input kernel is inactive
  Eigen::MatrixXd output;  // empty when the output kernel is inactive

  Eigen::MatrixXd total() const {
    if (input.size() == 0) return output;
    if (output.size() == 0) return input;
    return input + output;
  }
};

GramParts gram_parts(const KernelParams& params, const KernelSelector& sel,
                     const GpPoints& a, const GpPoints& b);

/// Cross-covariance matrix, entry (i,j) = k_c(a_i, b_j).
Eigen::MatrixXd gram(const KernelParams& params, const KernelSelector& sel,
                     const GpPoints& a, const GpPoints& b);

/// Value of k_c(p, p), identical for every point.
double gram_diagonal(const KernelParams& params, const KernelSelector& sel);

/// Number of free kernel hyperparameters (noise excluded) for a selector.
int num_kernel_params(const KernelSelector& sel, Eigen::Index dim);

/// dK/dtheta for each free log-hyperparameter, ordered as
/// [log_sigma2_in, log_lengthscale_in..., log_sigma2_out, log_lengthscale_out]
/// restricted to the active kernels. Noise is not a kernel parameter.
std::vector<Eigen::MatrixXd> gram_gradients(const KernelParams& params,
                                            const KernelSelector& sel,
                                            const GpPoints& a,
                                            const GpPoints& b);

std::vector<Eigen::MatrixXd> gram_gradients(const KernelParams& params,
                                            const KernelSelector& sel,
                                            const GpPoints& a);

/// Packs [kernel params..., log_noise] into the optimizer vector.
Eigen::VectorXd pack_params(const KernelParams& params, const KernelSelector& sel);
KernelParams unpack_params(const Eigen::VectorXd& v, const KernelSelector& sel,
                           Eigen::Index dim);

/// Scale-aware defaults: signal variances at var(targets)/2, lengthscales at
/// median pairwise distances of a deterministic <=256-point subsample, noise
/// at 0.1*var(targets). All values clamped into the log bounds.
KernelParams default_init(const GpPoints& points, const Eigen::VectorXd& targets,
                          const KernelSelector& sel);

/// Log-space optimizer bounds shared by the GP modules.
inline constexpr double kLogBound = 12.0;
inline constexpr double kLogNoiseLower = -18.420680743952367;  // log(1e-8)

}  // namespace rio
