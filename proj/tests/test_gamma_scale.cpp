#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fidres/gamma_scale.hpp"
#include "fidres/quadrature.hpp"
#include "fidres/specfun.hpp"
#include "test_util.hpp"

using namespace fidres;

TEST_CASE("model validation") {
  CHECK_THROWS_AS((GammaScaleModel{0, 1.0, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((GammaScaleModel{3, -1.0, 1.0}.validate()), std::domain_error);
  CHECK_THROWS_AS((GammaScaleModel{3, 1.0, 0.0}.validate()), std::domain_error);
  CHECK_NOTHROW((GammaScaleModel{3, 1.0, 1.0}.validate()));
}

TEST_CASE("density normalizes and matches the posterior route") {
  for (const GammaScaleModel m : {GammaScaleModel{5, 2.0, 1.3},
                                  GammaScaleModel{2, 0.7, 0.4},
                                  GammaScaleModel{10, 1.0, 5.0}}) {
    const double hi = fiducial_quantile(1.0 - 1e-10, m);
    const double lo = fiducial_quantile(1e-12, m);
    // log substitution: the support spans many decades for small shapes
    const double z = integrate(
        [&](double s) {
          const double t = std::exp(s);
          return t * fiducial_density(t, m);
        },
        std::log(lo), std::log(hi));
    CHECK(z == doctest::Approx(1.0).epsilon(1e-8));
    // two independent code paths to the same inverse-gamma law
    for (double t : {0.5 * m.y, m.y, 2.0 * m.y})
      CHECK(fiducial_density(t, m) ==
            doctest::Approx(bayes_posterior_density(t, m)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form inverse-gamma moments") {
  // shape s = 10, scale s*y: mean s y/(s-1), var (s y)^2 /((s-1)^2 (s-2))
  const GammaScaleModel m{10, 1.0, 1.0};
  const double mean =
      integrate([&](double t) { return t * fiducial_density(t, m); }, 1e-6, 60.0);
  const double m2 =
      integrate([&](double t) { return t * t * fiducial_density(t, m); }, 1e-6, 60.0);
  CHECK(mean == doctest::Approx(10.0 / 9.0).epsilon(1e-8));
  CHECK(m2 - mean * mean ==
        doctest::Approx(100.0 / 72.0 - 100.0 / 81.0).epsilon(1e-7));
}

TEST_CASE("cdf and quantile invert each other") {
  const GammaScaleModel m{5, 2.0, 1.3};
  for (double p : {0.01, 0.25, 0.5, 0.75, 0.99})
    CHECK(fiducial_cdf(fiducial_quantile(p, m), m) ==
          doctest::Approx(p).epsilon(1e-10));
  CHECK(fiducial_cdf(0.0, m) == 0.0);
  CHECK(fiducial_cdf(1e9, m) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cdf agrees with quadrature of the density") {
  const GammaScaleModel m{3, 1.5, 2.0};
  for (double t : {1.0, 2.0, 4.0})
    CHECK(fiducial_cdf(t, m) ==
          doctest::Approx(integrate(
                              [&](double s) { return fiducial_density(s, m); },
                              1e-9, t))
              .epsilon(1e-9));
}

TEST_CASE("sampler matches the cdf by KS") {
  const GammaScaleModel m{5, 2.0, 1.3};
  RngStream rng(21, 0);
  std::vector<double> draws = fiducial_sample(m, rng, 100000);
  std::sort(draws.begin(), draws.end());
  CHECK(ks_statistic(draws, [&](double t) { return fiducial_cdf(t, m); }) <
        1.63 / std::sqrt(100000.0));
}

TEST_CASE("point estimates") {
  const GammaScaleModel m{5, 2.0, 1.3};  // s = 10
  SUBCASE("closed forms") {
    CHECK(estimate_mean(m) == doctest::Approx(1.3 * 10.0 / 9.0).epsilon(1e-14));
    CHECK(estimate_invariant_sq(m) ==
          doctest::Approx(1.3 * 10.0 / 11.0).epsilon(1e-14));
    CHECK(estimate_geometric(m) ==
          doctest::Approx(1.3 * std::exp(std::log(10.0) - specfun::digamma(10.0)))
              .epsilon(1e-14));
  }
  SUBCASE("mean matches quadrature") {
    CHECK(estimate_mean(m) ==
          doctest::Approx(integrate(
                              [&](double t) { return t * fiducial_density(t, m); },
                              1e-6, 80.0))
              .epsilon(1e-8));
  }
  SUBCASE("geometric estimate is exp(E ln Theta)") {
    RngStream rng(22, 0);
    double acc = 0.0;
    const std::size_t n = 2000000;
    for (const double d : fiducial_sample(m, rng, n)) acc += std::log(d);
    CHECK(estimate_geometric(m) ==
          doctest::Approx(std::exp(acc / static_cast<double>(n))).epsilon(2e-3));
  }
  SUBCASE("invariant-sq estimate is E(1/Theta)/E(1/Theta^2)") {
    const double e1 = integrate(
        [&](double t) { return fiducial_density(t, m) / t; }, 1e-6, 80.0);
    const double e2 = integrate(
        [&](double t) { return fiducial_density(t, m) / (t * t); }, 1e-6, 80.0);
    CHECK(estimate_invariant_sq(m) == doctest::Approx(e1 / e2).epsilon(1e-8));
  }
  SUBCASE("mean requires shape > 1") {
    CHECK_THROWS_AS(estimate_mean(GammaScaleModel{1, 0.8, 1.0}),
                    std::domain_error);
  }
}

TEST_CASE("estimates scale linearly in y") {
  const GammaScaleModel a{4, 1.5, 1.0}, b{4, 1.5, 3.7};
  CHECK(estimate_mean(b) == doctest::Approx(3.7 * estimate_mean(a)).epsilon(1e-14));
  CHECK(estimate_geometric(b) ==
        doctest::Approx(3.7 * estimate_geometric(a)).epsilon(1e-14));
  CHECK(estimate_invariant_sq(b) ==
        doctest::Approx(3.7 * estimate_invariant_sq(a)).epsilon(1e-14));
}

TEST_CASE("ordering of the three estimates") {
  // geometric < invariant-sq < y < mean for moderate shape
  const GammaScaleModel m{5, 2.0, 1.0};
  CHECK(estimate_geometric(m) < estimate_mean(m));
  CHECK(estimate_invariant_sq(m) < 1.0);
  CHECK(estimate_mean(m) > 1.0);
}
