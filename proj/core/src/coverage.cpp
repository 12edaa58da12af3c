#include "fidres/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "fidres/corrfid.hpp"
#include "fidres/scaled_uniform.hpp"

namespace fidres {

CoverageSummary summarize_coverage(std::vector<double> cdf_at_truth) {
  if (cdf_at_truth.size() < 500)
    throw std::domain_error("coverage: need at least 500 replications");
  CoverageSummary out;
  out.reps = cdf_at_truth.size();
  out.levels = {0.05, 0.25, 0.5, 0.75, 0.95};
  const double n = static_cast<double>(out.reps);
  for (double level : out.levels) {
    std::size_t hits = 0;
    for (double v : cdf_at_truth)
      if (v <= level) ++hits;
    out.empirical.push_back(static_cast<double>(hits) / n);
  }
  std::sort(cdf_at_truth.begin(), cdf_at_truth.end());
  out.ks = ks_statistic(cdf_at_truth, [](double u) {
    return std::clamp(u, 0.0, 1.0);
  });
  out.ks_critical_001 = 1.63 / std::sqrt(n);
  out.uniform_at_001 = out.ks < out.ks_critical_001;
  return out;
}

CoverageSummary coverage_correlation(double rho, std::size_t n, std::size_t reps,
                                     RngStream& rng, double nu_offset) {
  BinormalParams params;
  params.rho = rho;
  std::vector<double> vals;
  vals.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const Sample2D sample = binormal_generate(params, n, rng);
    const double r = empirical_correlation(sample);
    CorrelationFiducial fid(r, nu_from_sample_size(n) + nu_offset);
    vals.push_back(fid.cdf(rho));
  }
  return summarize_coverage(std::move(vals));
}

CoverageSummary coverage_scaled_uniform(double theta, std::size_t n, double k,
                                        std::size_t reps, RngStream& rng) {
  std::vector<double> vals;
  vals.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const ScaledUniformData data = generate_data(theta, n, k, rng);
    vals.push_back(fiducial(data).cdf(theta));
  }
  return summarize_coverage(std::move(vals));
}

}  // namespace fidres
