#ifndef FIDRES_SCALED_UNIFORM_HPP
#define FIDRES_SCALED_UNIFORM_HPP

// Scaled uniform model: y = theta * u with u the (max, min) of n draws
// from Uniform(1-k, 1+k). Conditioning on the maximal invariant u2/u1
// gives a truncated Pareto fiducial on [y1/(1+k), y2/(1-k)] with index n.

#include <cstddef>

#include "fidres/rng.hpp"

namespace fidres {

struct ScaledUniformData {
  std::size_t n = 2;  // sample size
  double k = 0.5;     // spread, in (0,1)
  double y1 = 0.0;    // sample maximum
  double y2 = 0.0;    // sample minimum

  double lower() const { return y1 / (1.0 + k); }  // theta_ML
  double upper() const { return y2 / (1.0 - k); }  // theta_MU
  void validate() const;
};

struct TruncatedPareto {
  double lower = 0.0;
  double upper = 0.0;
  double index = 1.0;

  double density(double theta) const;
  double cdf(double theta) const { return trunc_pareto_cdf(theta, lower, upper, index); }
  double quantile(double u) const { return trunc_pareto_quantile(u, lower, upper, index); }
  double sample(RngStream& rng) const { return rng.trunc_pareto(lower, upper, index); }
};

/// The fiducial of the conditional model given u2/u1 = y2/y1. Throws
/// std::domain_error when the support [y1/(1+k), y2/(1-k)] is empty.
TruncatedPareto fiducial(const ScaledUniformData& data);

/// Optimal action under scale-invariant squared loss:
/// E(Theta^-1)/E(Theta^-2) = alpha/(alpha-1) (1-b*^{1-alpha})/(1-b*^{-alpha})
/// theta_ML with alpha = n+2, b* = theta_MU/theta_ML.
double estimate_invariant_sq(const ScaledUniformData& data);

/// Optimal action under squared log loss: exp(E ln Theta) =
/// theta_ML exp{1/n - ln(b*)/(b*^n - 1)}. (A version with denominator
/// 1 - b*^n circulates; it fails the b* -> 1 limit and the E ln Theta
/// quadrature check, so the sign-flipped form is shipped.)
double estimate_log_sq(const ScaledUniformData& data);

/// Draw a dataset: n i.i.d. Uniform(1-k, 1+k) scaled by theta, keep
/// (max, min).
ScaledUniformData generate_data(double theta, std::size_t n, double k,
                                RngStream& rng);

/// Draw a dataset from the conditional model given the maximal invariant
/// a = u2/u1: U1 | a has density ~ u^{n-1} on [(1-k)/a, 1+k], then
/// y1 = theta u1, y2 = a y1. This is the model to which the equivariant
/// risk-equality theorem applies.
ScaledUniformData generate_data_conditional(double theta, std::size_t n, double k,
                                            double invariant, RngStream& rng);

}  // namespace fidres

#endif
