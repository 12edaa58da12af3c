#include "fidres/gamma_scale.hpp"

#include <cmath>

#include "fidres/quadrature.hpp"
#include "fidres/specfun.hpp"

namespace fidres {

void GammaScaleModel::validate() const {
  if (n < 1 || !(alpha > 0.0) || !(y > 0.0))
    throw std::domain_error("GammaScaleModel: need n >= 1, alpha > 0, y > 0");
}

std::vector<double> fiducial_sample(const GammaScaleModel& model, RngStream& rng,
                                    std::size_t count) {
  model.validate();
  if (count < 1) throw std::domain_error("fiducial_sample: count must be >= 1");
  const double s = model.shape();
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(model.y / rng.gamma(s, 1.0 / s));
  return out;
}

double fiducial_density(double theta, const GammaScaleModel& model) {
  model.validate();
  if (!(theta > 0.0)) throw std::domain_error("fiducial_density: theta must be positive");
  // density of y/U with U ~ Gamma(s, 1/s), by change of variables
  const double s = model.shape();
  const double u = model.y / theta;
  const double lg = s * std::log(s) + (s - 1.0) * std::log(u) - s * u -
                    specfun::ln_gamma(s);
  return std::exp(lg) * model.y / (theta * theta);
}

double fiducial_cdf(double theta, const GammaScaleModel& model) {
  model.validate();
  if (theta <= 0.0) return 0.0;
  const double s = model.shape();
  // P(y/U <= theta) = P(U >= y s / (theta s)) with U*s ~ Gamma(s, 1)
  return 1.0 - specfun::gamma_p(s, s * model.y / theta);
}

double fiducial_quantile(double p, const GammaScaleModel& model) {
  model.validate();
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("fiducial_quantile: p must lie in (0,1)");
  double lo = model.y, hi = model.y;
  while (fiducial_cdf(lo, model) > p) lo *= 0.5;
  while (fiducial_cdf(hi, model) < p) hi *= 2.0;
  return invert_cdf([&](double t) { return fiducial_cdf(t, model); }, p, lo, hi,
                    1e-12);
}

double estimate_mean(const GammaScaleModel& model) {
  model.validate();
  const double s = model.shape();
  if (!(s > 1.0))
    throw std::domain_error("estimate_mean: fiducial mean undefined for n*alpha <= 1");
  return s / (s - 1.0) * model.y;
}

double estimate_geometric(const GammaScaleModel& model) {
  model.validate();
  const double s = model.shape();
  return model.y * std::exp(std::log(s) - specfun::digamma(s));
}

double estimate_invariant_sq(const GammaScaleModel& model) {
  model.validate();
  const double s = model.shape();
  return s / (s + 1.0) * model.y;
}

double bayes_posterior_density(double theta, const GammaScaleModel& model) {
  model.validate();
  if (!(theta > 0.0))
    throw std::domain_error("bayes_posterior_density: theta must be positive");
  // inverse-gamma(shape s, scale y s): prior 1/theta times gamma likelihood
  const double s = model.shape();
  const double scale = model.y * s;
  const double lg = s * std::log(scale) - specfun::ln_gamma(s) -
                    (s + 1.0) * std::log(theta) - scale / theta;
  return std::exp(lg);
}

}  // namespace fidres
