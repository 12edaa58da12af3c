#ifndef FIDRES_COVERAGE_HPP
#define FIDRES_COVERAGE_HPP

// Confidence-coverage simulation: replicate data at a fixed parameter,
// evaluate the fiducial CDF at the truth, and compare the resulting values
// against Uniform(0,1). An exact confidence distribution makes them
// exactly uniform.

#include <cstddef>
#include <vector>

#include "fidres/rng.hpp"

namespace fidres {

struct CoverageSummary {
  std::size_t reps = 0;
  std::vector<double> levels;              // one-sided nominal levels
  std::vector<double> empirical;           // observed P(cdf(truth) <= level)
  double ks = 0.0;                          // against Uniform(0,1)
  double ks_critical_001 = 0.0;             // 1.63 / sqrt(reps)
  bool uniform_at_001 = false;
};

/// Summarize a vector of fiducial-CDF-at-truth values.
CoverageSummary summarize_coverage(std::vector<double> cdf_at_truth);

/// Correlation model: replications of n binormal points at correlation
/// rho, fiducial CDF at rho with nu = n - 1 + nu_offset. A nonzero
/// nu_offset deliberately breaks coverage (negative control).
CoverageSummary coverage_correlation(double rho, std::size_t n, std::size_t reps,
                                     RngStream& rng, double nu_offset = 0.0);

/// Scaled uniform model at fixed theta, n, k.
CoverageSummary coverage_scaled_uniform(double theta, std::size_t n, double k,
                                        std::size_t reps, RngStream& rng);

}  // namespace fidres

#endif
