#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fidres/rng.hpp"

using namespace fidres;

TEST_CASE("equal (seed, stream) keys reproduce the sequence bitwise") {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  RngStream c(42, 7), d(42, 8);
  bool all_equal = true;
  for (int i = 0; i < 100; ++i) all_equal = all_equal && (c.next_u64() == d.next_u64());
  CHECK_FALSE(all_equal);
}

TEST_CASE("distinct streams are empirically uncorrelated") {
  RngStream a(0, 1), b(0, 2);
  const int n = 100000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = a.normal(), y = b.normal();
    sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
  }
  const double r = (sxy - sx * sy / n) /
                   std::sqrt((sxx - sx * sx / n) * (syy - sy * sy / n));
  CHECK(std::abs(r) < 0.01);
}

TEST_CASE("gamma sample mean, shape 3 scale 2") {
  RngStream rng(1, 0);
  RunningStat stat;
  for (int i = 0; i < 1000000; ++i) stat.add(rng.gamma(3.0, 2.0));
  const RiskEstimate r = stat.risk();
  CHECK(std::abs(r.mean - 6.0) < 3.0 * r.std_error);
}

TEST_CASE("gamma sampler handles shape < 1") {
  RngStream rng(1, 3);
  RunningStat stat;
  for (int i = 0; i < 500000; ++i) stat.add(rng.gamma(0.4, 1.5));
  const RiskEstimate r = stat.risk();
  CHECK(std::abs(r.mean - 0.6) < 3.0 * r.std_error);
  CHECK_THROWS_AS(rng.gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rng.gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("chi-square(4) sample variance") {
  RngStream rng(2, 0);
  const int n = 1000000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = rng.chi_square(4.0);
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= n;
  double m2 = 0, m4 = 0;
  for (double x : xs) {
    const double d = (x - mean) * (x - mean);
    m2 += d;
    m4 += d * d;
  }
  m2 /= n;
  m4 /= n;
  const double se_var = std::sqrt((m4 - m2 * m2) / n);
  CHECK(std::abs(m2 - 8.0) < 3.0 * se_var);
  CHECK_THROWS_AS(rng.chi_square(-1.0), std::domain_error);
}

TEST_CASE("normal draws pass KS against Phi") {
  RngStream rng(3, 0);
  const int n = 100000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = rng.normal();
  std::sort(xs.begin(), xs.end());
  CHECK(ks_statistic(xs, normal_cdf) < 1.63 / std::sqrt(n));
}

TEST_CASE("truncated Pareto sampler") {
  RngStream rng(4, 0);
  SUBCASE("degenerate support") {
    for (int i = 0; i < 10; ++i) CHECK(rng.trunc_pareto(2.5, 2.5, 3.0) == 2.5);
  }
  SUBCASE("KS against the closed-form CDF") {
    const int n = 100000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = rng.trunc_pareto(1.0, 2.0, 2.0);
    std::sort(xs.begin(), xs.end());
    const double d = ks_statistic(
        xs, [](double x) { return trunc_pareto_cdf(x, 1.0, 2.0, 2.0); });
    CHECK(d < 0.01);
  }
  SUBCASE("sample mean matches the analytic integral, n=2 L=1 U=2") {
    // int theta^-2 / int theta^-3 over [1,2] = (1/2) / (3/8) = 4/3
    RunningStat stat;
    for (int i = 0; i < 1000000; ++i) stat.add(rng.trunc_pareto(1.0, 2.0, 2.0));
    const RiskEstimate r = stat.risk();
    CHECK(std::abs(r.mean - 4.0 / 3.0) < 3.0 * r.std_error);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(rng.trunc_pareto(2.0, 1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(rng.trunc_pareto(-1.0, 1.0, 2.0), std::domain_error);
  }
}

TEST_CASE("inverse-CDF samplers recover u") {
  for (int i = 1; i < 1000; ++i) {
    const double u = i / 1000.0;
    CHECK(std::abs(trunc_pareto_cdf(trunc_pareto_quantile(u, 0.7, 3.1, 4.0), 0.7,
                                    3.1, 4.0) - u) < 1e-12);
    CHECK(std::abs(normal_cdf(normal_quantile(u)) - u) < 1e-12);
  }
}

TEST_CASE("ks_statistic") {
  SUBCASE("single draw") {
    const std::vector<double> xs = {1.0};
    CHECK(ks_statistic(xs, [](double) { return 0.5; }) == doctest::Approx(0.5));
  }
  SUBCASE("draws exactly at (i-0.5)/n quantiles") {
    const int n = 20;
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = (i + 0.5) / n;
    CHECK(ks_statistic(xs, [](double u) { return u; }) ==
          doctest::Approx(0.5 / n).epsilon(1e-12));
  }
  SUBCASE("uniform draws vs identity") {
    RngStream rng(5, 0);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = rng.uniform01();
    std::sort(xs.begin(), xs.end());
    CHECK(ks_statistic(xs, [](double u) { return u; }) < 0.006);
  }
  SUBCASE("empty input") {
    const std::vector<double> empty;
    CHECK_THROWS_AS(ks_statistic(empty, [](double) { return 0.0; }),
                    std::domain_error);
  }
}

TEST_CASE("RunningStat") {
  RunningStat s;
  s.add(1.0);
  CHECK_THROWS_AS(s.variance(), std::domain_error);
  s.add(3.0);
  CHECK(s.mean() == doctest::Approx(2.0));
  CHECK(s.variance() == doctest::Approx(2.0));
  CHECK(s.risk().std_error == doctest::Approx(1.0));
  CHECK(s.risk().n == 2);
}
