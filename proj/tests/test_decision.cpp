#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fidres/decision.hpp"
#include "fidres/gamma_scale.hpp"
#include "fidres/quadrature.hpp"
#include "fidres/scaled_uniform.hpp"

using namespace fidres;

TEST_CASE("loss values") {
  CHECK(loss(LossKind::squared, 2.0, 3.5) == doctest::Approx(2.25));
  CHECK(loss(LossKind::absolute, 2.0, 3.5) == doctest::Approx(1.5));
  CHECK(loss(LossKind::scale_invariant_sq, 2.0, 3.0) == doctest::Approx(0.25));
  CHECK(loss(LossKind::log_sq, 1.0, std::exp(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(loss(LossKind::scale_invariant_sq, -1.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(loss(LossKind::log_sq, 1.0, 0.0), std::domain_error);
  Eigen::VectorXd a(2), b(2);
  a << 1, 2;
  b << 4, 6;
  CHECK(loss_squared_norm(a, b) == doctest::Approx(25.0));
}

TEST_CASE("loss name round trip") {
  for (LossKind k : {LossKind::absolute, LossKind::squared,
                     LossKind::scale_invariant_sq, LossKind::log_sq,
                     LossKind::squared_norm})
    CHECK(loss_from_string(to_string(k)) == k);
  CHECK(!loss_from_string("bogus").has_value());
}

TEST_CASE("scale invariance flags") {
  CHECK(is_scale_invariant(LossKind::scale_invariant_sq));
  CHECK(is_scale_invariant(LossKind::log_sq));
  CHECK(!is_scale_invariant(LossKind::squared));
  CHECK(!is_scale_invariant(LossKind::absolute));
  // spot-check the claim numerically
  for (double a : {0.5, 3.0}) {
    CHECK(loss(LossKind::scale_invariant_sq, a * 2.0, a * 3.0) ==
          doctest::Approx(loss(LossKind::scale_invariant_sq, 2.0, 3.0)));
    CHECK(loss(LossKind::log_sq, a * 2.0, a * 3.0) ==
          doctest::Approx(loss(LossKind::log_sq, 2.0, 3.0)));
  }
}

namespace {

FiducialSampler gamma_sampler(const GammaScaleModel& m) {
  FiducialSampler s;
  s.draw = [m](RngStream& rng) { return fiducial_sample(m, rng, 1)[0]; };
  s.mean = estimate_mean(m);
  s.median = fiducial_quantile(0.5, m);
  s.quantile = [m](double p) { return fiducial_quantile(p, m); };
  return s;
}

}  // namespace

TEST_CASE("fiducial risk against quadrature") {
  const GammaScaleModel m{5, 2.0, 1.3};
  const FiducialSampler s = gamma_sampler(m);
  RngStream rng(51, 0);
  const double action = 1.3;
  const RiskEstimate est =
      fiducial_risk(s, action, LossKind::squared, 400000, rng);
  const double exact = integrate(
      [&](double t) {
        return (t - action) * (t - action) * fiducial_density(t, m);
      },
      1e-6, 80.0);
  CHECK(std::abs(est.mean - exact) < 4.0 * est.std_error);
  CHECK(est.std_error > 0.0);
  CHECK(est.n == 400000);
}

TEST_CASE("closed-form minimizers per loss") {
  const GammaScaleModel m{5, 2.0, 1.3};
  const FiducialSampler s = gamma_sampler(m);
  RngStream rng(52, 0);
  CHECK(minimize_fiducial_risk(s, LossKind::squared, rng) ==
        doctest::Approx(estimate_mean(m)).epsilon(1e-12));
  CHECK(minimize_fiducial_risk(s, LossKind::absolute, rng) ==
        doctest::Approx(fiducial_quantile(0.5, m)).epsilon(1e-12));
  CHECK(minimize_fiducial_risk(s, LossKind::scale_invariant_sq, rng) ==
        doctest::Approx(estimate_invariant_sq(m)).epsilon(5e-3));
  CHECK(minimize_fiducial_risk(s, LossKind::log_sq, rng) ==
        doctest::Approx(estimate_geometric(m)).epsilon(5e-3));
}

TEST_CASE("golden-section fallback finds the same minimizer") {
  const GammaScaleModel m{5, 2.0, 1.3};
  const FiducialSampler s = gamma_sampler(m);
  RngStream rng(53, 0);
  const double golden =
      minimize_fiducial_risk_golden(s, LossKind::squared, rng, 400000);
  CHECK(golden == doctest::Approx(estimate_mean(m)).epsilon(0.01));
}

TEST_CASE("frequentist risk of the sample mean under squared loss") {
  // data are n i.i.d. Gamma(alpha, theta/alpha); the mean estimator has
  // risk theta^2 / (n alpha)
  const std::size_t n = 5;
  const double alpha = 2.0;
  DataGenerator gen = [=](double theta, RngStream& rng) {
    std::vector<double> d(n);
    for (double& v : d) v = rng.gamma(alpha, theta / alpha);
    return d;
  };
  Estimator mean_est = [](const std::vector<double>& d) {
    double s = 0;
    for (double v : d) s += v;
    return s / static_cast<double>(d.size());
  };
  RngStream rng(54, 0);
  for (double theta : {0.5, 1.0, 3.0}) {
    const RiskEstimate est =
        frequentist_risk(gen, mean_est, LossKind::squared, theta, 200000, rng);
    CHECK(std::abs(est.mean - theta * theta / 10.0) < 4.0 * est.std_error);
  }
}

namespace {

EquivariantProblem gamma_problem(std::size_t n, double alpha) {
  EquivariantProblem p;
  p.name = "gamma-scale";
  p.generate = [=](double theta, RngStream& rng) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += rng.gamma(alpha, theta / alpha);
    return std::vector<double>{s / static_cast<double>(n)};
  };
  p.estimate = [=](const std::vector<double>& d) {
    return estimate_invariant_sq(GammaScaleModel{n, alpha, d[0]});
  };
  p.fiducial = [=](const std::vector<double>& d) {
    const GammaScaleModel m{n, alpha, d[0]};
    FiducialSampler s;
    s.draw = [m](RngStream& rng) { return fiducial_sample(m, rng, 1)[0]; };
    s.mean = estimate_mean(m);
    s.quantile = [m](double q) { return fiducial_quantile(q, m); };
    return s;
  };
  return p;
}

}  // namespace

TEST_CASE("risk-equality check passes for the equivariant gamma problem") {
  const EquivariantProblem p = gamma_problem(5, 2.0);
  const std::vector<double> thetas = {0.5, 1.0, 4.0};
  const std::vector<std::vector<double>> datasets = {{0.7}, {1.0}, {2.5}};
  RngStream rng(55, 0);
  const Theorem5Report rep = theorem5_check(
      p, LossKind::scale_invariant_sq, thetas, datasets, 300000, rng);
  CHECK(rep.pass);
  CHECK(rep.frequentist.size() == 3);
  CHECK(rep.fiducial.size() == 3);
  // the shared constant: exact value 1/(n alpha + 1) for this problem
  for (const RiskEstimate& e : rep.frequentist)
    CHECK(std::abs(e.mean - 1.0 / 11.0) < 4.0 * e.std_error);
  for (const RiskEstimate& e : rep.fiducial)
    CHECK(std::abs(e.mean - 1.0 / 11.0) < 4.0 * e.std_error);
}

TEST_CASE("risk-equality check rejects a non-equivariant estimator") {
  EquivariantProblem p = gamma_problem(5, 2.0);
  p.estimate = [](const std::vector<double>& d) { return d[0] + 1.0; };
  const std::vector<double> thetas = {0.5, 1.0, 4.0};
  const std::vector<std::vector<double>> datasets = {{0.7}, {1.0}, {2.5}};
  RngStream rng(56, 0);
  CHECK_THROWS_AS(theorem5_check(p, LossKind::scale_invariant_sq, thetas,
                                 datasets, 1000, rng),
                  std::invalid_argument);
}

TEST_CASE("risk-equality check rejects a non-invariant loss") {
  const EquivariantProblem p = gamma_problem(5, 2.0);
  const std::vector<double> thetas = {0.5, 1.0, 4.0};
  const std::vector<std::vector<double>> datasets = {{0.7}, {1.0}, {2.5}};
  RngStream rng(57, 0);
  CHECK_THROWS_AS(
      theorem5_check(p, LossKind::squared, thetas, datasets, 1000, rng),
      std::invalid_argument);
}

TEST_CASE("risk equality holds for the conditional scaled-uniform model") {
  const std::size_t n = 2;
  const double k = 0.5, a = 0.8;
  EquivariantProblem p;
  p.name = "scaled-uniform-conditional";
  p.generate = [=](double theta, RngStream& rng) {
    const ScaledUniformData d = generate_data_conditional(theta, n, k, a, rng);
    return std::vector<double>{d.y1, d.y2};
  };
  p.estimate = [=](const std::vector<double>& d) {
    return estimate_invariant_sq(ScaledUniformData{n, k, d[0], d[1]});
  };
  p.fiducial = [=](const std::vector<double>& d) {
    const TruncatedPareto fid = fiducial(ScaledUniformData{n, k, d[0], d[1]});
    FiducialSampler s;
    s.draw = [fid](RngStream& rng) { return fid.sample(rng); };
    s.quantile = [fid](double q) { return fid.quantile(q); };
    return s;
  };
  const std::vector<double> thetas = {0.5, 1.0, 2.0};
  // datasets sharing the invariant y2/y1 = a = 0.8
  const std::vector<std::vector<double>> datasets = {
      {1.5, 1.2}, {1.0, 0.8}, {2.5, 2.0}};
  RngStream rng(58, 0);
  const Theorem5Report rep = theorem5_check(
      p, LossKind::scale_invariant_sq, thetas, datasets, 300000, rng);
  CHECK(rep.pass);
}
