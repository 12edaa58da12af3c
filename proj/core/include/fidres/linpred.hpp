#ifndef FIDRES_LINPRED_HPP
#define FIDRES_LINPRED_HPP

// Fiducial estimation and prediction for the linear model y = X beta + u
// with i.i.d. standard Gaussian noise. Conditioning on the maximal
// invariant (1 - p)y, where p projects onto range(X), gives fiducial draws
// Theta = p(y - U); every optimal estimate reduces to a function of p*y,
// so rank-deficient designs are handled without choosing a coefficient
// representative.

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "fidres/rng.hpp"

namespace fidres {

struct LinearModel {
  Eigen::MatrixXd design;      // m x p
  Eigen::VectorXd observation;  // length m
  void validate() const;
};

/// Numerical rank with threshold max(m,p) * eps * sigma_max.
struct Projection {
  Eigen::MatrixXd matrix;  // m x m orthogonal projector onto range(X)
  Eigen::Index rank = 0;
};

Projection projection(const Eigen::MatrixXd& design);

/// Draws Theta = p(y - U), U i.i.d. standard normal.
std::vector<Eigen::VectorXd> fiducial_theta_sample(const LinearModel& model,
                                                   RngStream& rng,
                                                   std::size_t count);

/// Fiducial-optimal estimate of A theta: A p y, exact (no sampling).
Eigen::VectorXd optimal_estimate(const Eigen::MatrixXd& a_map,
                                 const LinearModel& model);

/// x* . beta_hat with the minimum-norm least-squares coefficients; equals
/// the optimal estimate of x* beta whenever x* lies in the row space of X.
double predict(const Eigen::VectorXd& x_star, const LinearModel& model);

/// Minimum-norm least-squares coefficients (SVD pseudoinverse).
Eigen::VectorXd min_norm_coefficients(const LinearModel& model);

}  // namespace fidres

#endif
