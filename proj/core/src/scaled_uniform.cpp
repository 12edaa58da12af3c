#include "fidres/scaled_uniform.hpp"

#include <algorithm>
#include <cmath>

namespace fidres {

void ScaledUniformData::validate() const {
  if (n < 2) throw std::domain_error("ScaledUniformData: need n >= 2");
  if (!(k > 0.0) || !(k < 1.0))
    throw std::domain_error("ScaledUniformData: k must lie in (0,1)");
  if (!(y2 > 0.0) || !(y2 <= y1))
    throw std::domain_error("ScaledUniformData: need 0 < min <= max");
  if (lower() > upper() * (1.0 + 1e-12))
    throw std::domain_error(
        "ScaledUniformData: inconsistent data, empty fiducial support "
        "(max/(1+k) > min/(1-k))");
}

double TruncatedPareto::density(double theta) const {
  if (theta < lower || theta > upper) return 0.0;
  if (lower == upper) throw std::domain_error("TruncatedPareto: degenerate support has no density");
  const double z = (std::pow(lower, -index) - std::pow(upper, -index)) / index;
  return std::pow(theta, -index - 1.0) / z;
}

TruncatedPareto fiducial(const ScaledUniformData& data) {
  data.validate();
  return {std::min(data.lower(), data.upper()), data.upper(),
          static_cast<double>(data.n)};
}

double estimate_invariant_sq(const ScaledUniformData& data) {
  data.validate();
  const double tml = data.lower();
  const double bstar = data.upper() / tml;
  if (bstar <= 1.0 + 1e-14) return tml;
  const double a = static_cast<double>(data.n) + 2.0;
  return a / (a - 1.0) * (1.0 - std::pow(bstar, 1.0 - a)) /
         (1.0 - std::pow(bstar, -a)) * tml;
}

double estimate_log_sq(const ScaledUniformData& data) {
  data.validate();
  const double tml = data.lower();
  const double bstar = data.upper() / tml;
  if (bstar <= 1.0 + 1e-14) return tml;
  const double n = static_cast<double>(data.n);
  return tml * std::exp(1.0 / n - std::log(bstar) / (std::pow(bstar, n) - 1.0));
}

ScaledUniformData generate_data(double theta, std::size_t n, double k,
                                RngStream& rng) {
  if (!(theta > 0.0) || n < 2 || !(k > 0.0) || !(k < 1.0))
    throw std::domain_error("generate_data: invalid parameters");
  double umax = 0.0, umin = 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 1.0 - k + 2.0 * k * rng.uniform01();
    umax = std::max(umax, u);
    umin = std::min(umin, u);
  }
  return {n, k, theta * umax, theta * umin};
}

ScaledUniformData generate_data_conditional(double theta, std::size_t n, double k,
                                            double invariant, RngStream& rng) {
  if (!(theta > 0.0) || n < 2 || !(k > 0.0) || !(k < 1.0))
    throw std::domain_error("generate_data_conditional: invalid parameters");
  const double lo = (1.0 - k) / invariant, hi = 1.0 + k;
  if (!(invariant > 0.0) || invariant > 1.0 || lo > hi)
    throw std::domain_error("generate_data_conditional: invariant outside ((1-k)/(1+k), 1]");
  // inverse CDF of density ~ u^{n-1} on [lo, hi]
  const double nn = static_cast<double>(n);
  const double lon = std::pow(lo, nn), hin = std::pow(hi, nn);
  const double u1 = std::pow(lon + rng.uniform01() * (hin - lon), 1.0 / nn);
  return {n, k, theta * u1, theta * invariant * u1};
}

}  // namespace fidres
