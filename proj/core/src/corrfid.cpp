#include "fidres/corrfid.hpp"

#include <cmath>

#include "fidres/quadrature.hpp"
#include "fidres/specfun.hpp"

namespace fidres {

namespace {
constexpr double kEdge = 1e-12;  // quadrature endpoint inset
}

double empirical_correlation(const Sample2D& sample) {
  const std::size_t n = sample.points.size();
  if (n < 3) throw std::domain_error("empirical_correlation: need at least 3 points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : sample.points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (const auto& [x, y] : sample.points) {
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::domain_error("empirical_correlation: degenerate coordinate variance");
  return sxy / std::sqrt(sxx * syy);
}

Sample2D binormal_generate(const BinormalParams& p, std::size_t n, RngStream& rng) {
  if (n < 3) throw std::domain_error("binormal_generate: need n >= 3");
  if (!(p.sigma_x > 0.0) || !(p.sigma_y > 0.0) || !(std::abs(p.rho) < 1.0))
    throw std::domain_error("binormal_generate: invalid parameters");
  Sample2D out;
  out.points.reserve(n);
  const double s = std::sqrt(1.0 - p.rho * p.rho);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.normal();
    const double v = rng.normal();
    out.points.emplace_back(p.mu_x + p.sigma_x * u,
                            p.mu_y + p.sigma_y * (p.rho * u + s * v));
  }
  return out;
}

double elfving_solve(double m1, double m2, double m3, double r) {
  const double t = (m3 + std::sqrt(m2) * r / std::sqrt(1.0 - r * r)) / std::sqrt(m1);
  return t / std::sqrt(1.0 + t * t);
}

CorrelationFiducial::CorrelationFiducial(double r, double nu) : r_(r), nu_(nu) {
  if (!(std::abs(r) < 1.0))
    throw std::domain_error("CorrelationFiducial: degenerate correlation r = +/-1");
  if (!(nu >= 2.0))
    throw std::domain_error("CorrelationFiducial: nu < 2 is not supported");
}

double CorrelationFiducial::density(double rho) const {
  if (!(std::abs(rho) < 1.0))
    throw std::domain_error("fiducial density: |rho| must be < 1");
  const double lpre = 0.5 * (nu_ - 1.0) * std::log1p(-r_ * r_) +
                      0.5 * (nu_ - 2.0) * std::log1p(-rho * rho) +
                      0.5 * (1.0 - 2.0 * nu_) * std::log1p(-r_ * rho) -
                      0.5 * std::log(2.0) - specfun::ln_beta(nu_ + 0.5, 0.5);
  const double hyp = specfun::gauss_2f1(1.5, -0.5, nu_ + 0.5, 0.5 * (1.0 + r_ * rho));
  return std::exp(lpre) * hyp;
}

double CorrelationFiducial::cdf(double rho) const {
  if (rho <= -1.0) return 0.0;
  if (rho >= 1.0) return 1.0;
  const double lo = -1.0 + kEdge;
  if (rho <= lo) return 0.0;
  return integrate([this](double t) { return density(t); }, lo, rho);
}

double CorrelationFiducial::quantile(double p) const {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("fiducial quantile: p must lie in (0,1)");
  return invert_cdf([this](double x) { return cdf(x); }, p, -1.0 + kEdge,
                    1.0 - kEdge, 1e-10);
}

std::vector<double> CorrelationFiducial::sample(RngStream& rng,
                                                std::size_t count) const {
  if (count < 1) throw std::domain_error("elfving sample: count must be >= 1");
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double m1 = rng.chi_square(nu_);
    const double m2 = rng.chi_square(nu_ - 1.0);
    const double m3 = rng.normal();
    out.push_back(elfving_solve(m1, m2, m3, r_));
  }
  return out;
}

namespace {

double rao_g(double c) {
  const double theta = std::acos(-c);
  const double s = std::sin(theta);
  return (theta - 0.5 * std::sin(2.0 * theta)) / (s * s * s);
}

// n-th central difference of rao_g at c with spacing h
double central_diff(int n, double c, double h) {
  if (n == 0) return rao_g(c);
  double acc = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom * rao_g(c + (0.5 * n - k) * h);
    binom *= static_cast<double>(n - k) / (k + 1.0);
  }
  return acc / std::pow(h, n);
}

// 3-level Richardson extrapolation of the O(h^2) stencil
double derivative(int n, double c, double h) {
  const double d1 = central_diff(n, c, h);
  const double d2 = central_diff(n, c, 0.5 * h);
  const double d4 = central_diff(n, c, 0.25 * h);
  const double r1 = (4.0 * d2 - d1) / 3.0;
  const double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

}  // namespace

double CorrelationFiducial::rao_density(double rho) const {
  const double nu_round = std::round(nu_);
  if (std::abs(nu_ - nu_round) > 1e-12 || nu_round < 2.0 || nu_round > 6.0)
    throw std::domain_error("rao_density: integer nu in [2,6] required");
  const int nu = static_cast<int>(nu_round);
  const double c = rho * r_;
  if (!(std::abs(c) < 1.0)) throw std::domain_error("rao_density: |rho r| must be < 1");
  const double h = std::max(1e-2, std::abs(c) * 1e-2);
  const double d = derivative(nu - 2, c, h);
  double lfact = 0.0;
  for (int k = 2; k <= nu - 2; ++k) lfact += std::log(static_cast<double>(k));
  const double pre = 0.5 * (nu_ - 1.0) * std::log1p(-r_ * r_) +
                     0.5 * (nu_ - 2.0) * std::log1p(-rho * rho) -
                     std::log(M_PI) - lfact;
  return std::exp(pre) * d;
}

double estimate_rho_absolute_loss(const Sample2D& sample) {
  const double r = empirical_correlation(sample);
  CorrelationFiducial fid(r, nu_from_sample_size(sample.points.size()));
  return fid.quantile(0.5);
}

}  // namespace fidres
