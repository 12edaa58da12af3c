#ifndef FIDRES_RNG_HPP
#define FIDRES_RNG_HPP

// Deterministic-seeded sampling shared by every model module.
//
// RngStream is a counter-based SplitMix64 generator keyed by (seed,
// stream-id): equal keys reproduce the identical draw sequence bit for bit,
// distinct stream-ids start at unrelated counter positions, so parallel
// sweeps can hand one stream to each task.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fidres {

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0, 1).
  double uniform01();

  /// Standard normal via the inverse CDF (so cdf(sample(u)) == u).
  double normal();

  /// Gamma(shape, scale). Marsaglia-Tsang rejection for shape >= 1,
  /// the Gamma(a) = Gamma(a+1) U^{1/a} boost for shape < 1.
  double gamma(double shape, double scale);

  /// Chi-square(df) == Gamma(df/2, 2).
  double chi_square(double df);

  /// Truncated Pareto with density proportional to x^{-index-1} on
  /// [lower, upper], drawn by inverse CDF.
  double trunc_pareto(double lower, double upper, double index);

 private:
  std::uint64_t state_;
};

/// Standard normal quantile (Acklam's approximation plus one Halley
/// refinement against erfc); absolute error below 1e-13.
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse CDF of the truncated Pareto, u in [0,1].
double trunc_pareto_quantile(double u, double lower, double upper, double index);

/// CDF of the truncated Pareto.
double trunc_pareto_cdf(double x, double lower, double upper, double index);

/// Kolmogorov-Smirnov sup distance between the empirical CDF of sorted
/// draws and a reference CDF.
double ks_statistic(std::span<const double> sorted_draws,
                    const std::function<double(double)>& cdf);

/// Monte Carlo mean with its standard error.
struct RiskEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

/// Streaming mean/variance accumulator (Welford).
class RunningStat {
 public:
  void add(double x);
  double mean() const { return mean_; }
  double variance() const;  // sample variance, n >= 2
  std::size_t count() const { return n_; }
  RiskEstimate risk() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace fidres

#endif
