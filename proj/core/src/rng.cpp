#include "fidres/rng.hpp"

#include <algorithm>
#include <cmath>

namespace fidres {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix64(seed + kGolden) ^ mix64(mix64(stream_id) + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t RngStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RngStream::uniform01() {
  // 53 random bits, offset half a ulp so the result is strictly inside (0,1)
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
}

double RngStream::normal() { return normal_quantile(uniform01()); }

double RngStream::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw std::domain_error("gamma sampler: shape and scale must be positive");
  if (shape < 1.0) {
    const double u = uniform01();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return scale * d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double RngStream::chi_square(double df) {
  if (!(df > 0.0)) throw std::domain_error("chi_square sampler: df must be positive");
  return gamma(0.5 * df, 2.0);
}

double RngStream::trunc_pareto(double lower, double upper, double index) {
  return trunc_pareto_quantile(uniform01(), lower, upper, index);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("normal_quantile: p must lie in (0,1)");
  // Acklam's rational approximation
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double s = q * q;
    x = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * q /
        (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // one Halley step against the exact CDF
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double trunc_pareto_quantile(double u, double lower, double upper, double index) {
  if (!(lower > 0.0) || !(lower <= upper))
    throw std::domain_error("trunc_pareto: need 0 < lower <= upper");
  if (!(index > 0.0)) throw std::domain_error("trunc_pareto: index must be positive");
  if (!(u >= 0.0) || !(u <= 1.0))
    throw std::domain_error("trunc_pareto_quantile: u must lie in [0,1]");
  if (lower == upper) return lower;
  const double ln = std::pow(lower, -index);
  const double un = std::pow(upper, -index);
  return std::pow(ln - u * (ln - un), -1.0 / index);
}

double trunc_pareto_cdf(double x, double lower, double upper, double index) {
  if (!(lower > 0.0) || !(lower <= upper))
    throw std::domain_error("trunc_pareto: need 0 < lower <= upper");
  if (x <= lower) return 0.0;
  if (x >= upper) return 1.0;
  const double ln = std::pow(lower, -index);
  const double un = std::pow(upper, -index);
  return (ln - std::pow(x, -index)) / (ln - un);
}

double ks_statistic(std::span<const double> sorted_draws,
                    const std::function<double(double)>& cdf) {
  if (sorted_draws.empty()) throw std::domain_error("ks_statistic: empty sample");
  const double n = static_cast<double>(sorted_draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_draws.size(); ++i) {
    const double f = cdf(sorted_draws[i]);
    d = std::max(d, std::max(f - i / n, (i + 1.0) / n - f));
  }
  return d;
}

void RunningStat::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(n_);
  m2_ += delta * (x - mean_);
}

double RunningStat::variance() const {
  if (n_ < 2) throw std::domain_error("RunningStat: variance needs n >= 2");
  return m2_ / static_cast<double>(n_ - 1);
}

RiskEstimate RunningStat::risk() const {
  return {mean_, std::sqrt(variance() / static_cast<double>(n_)), n_};
}

}  // namespace fidres
