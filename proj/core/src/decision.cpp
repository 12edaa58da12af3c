#include "fidres/decision.hpp"

#include <algorithm>
#include <cmath>

#include "fidres/specfun.hpp"

namespace fidres {

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::absolute: return "absolute";
    case LossKind::squared: return "squared";
    case LossKind::scale_invariant_sq: return "scale-invariant-sq";
    case LossKind::log_sq: return "log-sq";
    case LossKind::squared_norm: return "squared-norm";
  }
  return "?";
}

std::optional<LossKind> loss_from_string(const std::string& name) {
  if (name == "absolute") return LossKind::absolute;
  if (name == "squared") return LossKind::squared;
  if (name == "scale-invariant-sq") return LossKind::scale_invariant_sq;
  if (name == "log-sq") return LossKind::log_sq;
  if (name == "squared-norm") return LossKind::squared_norm;
  return std::nullopt;
}

double loss(LossKind kind, double gamma, double x) {
  switch (kind) {
    case LossKind::absolute:
      return std::abs(gamma - x);
    case LossKind::squared:
      return (gamma - x) * (gamma - x);
    case LossKind::scale_invariant_sq: {
      if (!(gamma > 0.0) || !(x > 0.0))
        throw std::domain_error("scale_invariant_sq loss: positive arguments required");
      const double d = (gamma - x) / gamma;
      return d * d;
    }
    case LossKind::log_sq: {
      if (!(gamma > 0.0) || !(x > 0.0))
        throw std::domain_error("log_sq loss: positive arguments required");
      const double d = std::log(gamma) - std::log(x);
      return d * d;
    }
    case LossKind::squared_norm:
      throw std::domain_error("squared_norm loss is vector valued; use loss_squared_norm");
  }
  throw std::domain_error("loss: unknown kind");
}

double loss_squared_norm(const Eigen::VectorXd& gamma, const Eigen::VectorXd& x) {
  if (gamma.size() != x.size())
    throw std::domain_error("loss_squared_norm: dimension mismatch");
  return (gamma - x).squaredNorm();
}

bool is_scale_invariant(LossKind kind) {
  return kind == LossKind::scale_invariant_sq || kind == LossKind::log_sq;
}

RiskEstimate fiducial_risk(const FiducialSampler& sampler, double action,
                           LossKind kind, std::size_t n_draws, RngStream& rng) {
  if (n_draws < 100) throw std::domain_error("fiducial_risk: need n_draws >= 100");
  RunningStat stat;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n_draws; ++i) {
    try {
      stat.add(loss(kind, sampler.draw(rng), action));
    } catch (const std::domain_error&) {
      ++failures;
    }
  }
  if (failures * 1000 > n_draws)
    throw numeric_error("fiducial_risk: more than 0.1% of loss evaluations failed");
  return stat.risk();
}

namespace {

std::vector<double> crn_draws(const FiducialSampler& sampler, std::size_t n,
                              RngStream& rng) {
  std::vector<double> g(n);
  for (auto& v : g) v = sampler.draw(rng);
  return g;
}

double golden_section(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-10 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double minimize_fiducial_risk_golden(const FiducialSampler& sampler,
                                     LossKind kind, RngStream& rng,
                                     std::size_t n_draws) {
  // common random numbers: one fixed sample, action varies
  std::vector<double> g = crn_draws(sampler, n_draws, rng);
  double lo, hi;
  if (sampler.quantile) {
    lo = (*sampler.quantile)(0.001);
    hi = (*sampler.quantile)(0.999);
  } else {
    std::vector<double> s = g;
    std::sort(s.begin(), s.end());
    lo = s[static_cast<std::size_t>(0.001 * (s.size() - 1))];
    hi = s[static_cast<std::size_t>(0.999 * (s.size() - 1))];
  }
  const auto objective = [&](double action) {
    double acc = 0.0;
    for (double v : g) acc += loss(kind, v, action);
    return acc / static_cast<double>(g.size());
  };
  return golden_section(objective, lo, hi);
}

double minimize_fiducial_risk(const FiducialSampler& sampler, LossKind kind,
                              RngStream& rng, std::size_t n_draws) {
  switch (kind) {
    case LossKind::squared: {
      if (sampler.mean) return *sampler.mean;
      RunningStat stat;
      for (std::size_t i = 0; i < n_draws; ++i) stat.add(sampler.draw(rng));
      if (!std::isfinite(stat.mean()))
        throw numeric_error("minimize_fiducial_risk: non-finite mean");
      return stat.mean();
    }
    case LossKind::absolute: {
      if (sampler.median) return *sampler.median;
      if (sampler.quantile) return (*sampler.quantile)(0.5);
      std::vector<double> g = crn_draws(sampler, n_draws, rng);
      std::nth_element(g.begin(), g.begin() + g.size() / 2, g.end());
      return g[g.size() / 2];
    }
    case LossKind::scale_invariant_sq: {
      RunningStat inv, inv2;
      for (std::size_t i = 0; i < n_draws; ++i) {
        const double v = sampler.draw(rng);
        if (!(v > 0.0))
          throw std::domain_error("minimize_fiducial_risk: nonpositive draw under scale loss");
        inv.add(1.0 / v);
        inv2.add(1.0 / (v * v));
      }
      if (!std::isfinite(inv2.mean()) || inv2.mean() == 0.0)
        throw numeric_error("minimize_fiducial_risk: undefined inverse moments");
      return inv.mean() / inv2.mean();
    }
    case LossKind::log_sq: {
      RunningStat lg;
      for (std::size_t i = 0; i < n_draws; ++i) {
        const double v = sampler.draw(rng);
        if (!(v > 0.0))
          throw std::domain_error("minimize_fiducial_risk: nonpositive draw under log loss");
        lg.add(std::log(v));
      }
      return std::exp(lg.mean());
    }
    default:
      return minimize_fiducial_risk_golden(sampler, kind, rng, n_draws);
  }
}

RiskEstimate frequentist_risk(const DataGenerator& generator,
                              const Estimator& estimator, LossKind kind,
                              double theta, std::size_t n_reps, RngStream& rng) {
  if (n_reps < 100) throw std::domain_error("frequentist_risk: need n_reps >= 100");
  RunningStat stat;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n_reps; ++i) {
    const std::vector<double> data = generator(theta, rng);
    try {
      stat.add(loss(kind, theta, estimator(data)));
    } catch (const std::domain_error&) {
      ++failures;
    }
  }
  if (failures * 1000 > n_reps)
    throw numeric_error("frequentist_risk: more than 0.1% of estimator evaluations failed");
  return stat.risk();
}

namespace {

bool agree(const RiskEstimate& a, const RiskEstimate& b) {
  const double se = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  return std::abs(a.mean - b.mean) <= 3.0 * se;
}

}  // namespace

Theorem5Report theorem5_check(const EquivariantProblem& problem, LossKind kind,
                              std::span<const double> thetas,
                              const std::vector<std::vector<double>>& datasets,
                              std::size_t n_reps, RngStream& rng) {
  if (thetas.size() < 3 || datasets.size() < 3)
    throw std::domain_error("theorem5_check: need >= 3 thetas and >= 3 datasets");

  // loss invariance precheck
  for (double a : {0.5, 2.0, 10.0}) {
    const double theta = 3.0, x = 1.0;
    const double l0 = loss(kind, theta, x);
    const double l1 = loss(kind, a * theta, a * x);
    if (std::abs(l0 - l1) > 1e-10 * std::max(1.0, std::abs(l0)))
      throw std::invalid_argument(
          "theorem5_check: loss " + to_string(kind) + " not scale invariant at (a, theta, x) = (" +
          std::to_string(a) + ", 3, 1)");
  }
  // estimator equivariance precheck on the supplied datasets
  for (const auto& data : datasets) {
    const double x0 = problem.estimate(data);
    for (double a : {0.5, 2.0, 10.0}) {
      std::vector<double> scaled = data;
      for (auto& v : scaled) v *= a;
      const double xa = problem.estimate(scaled);
      if (std::abs(xa - a * x0) > 1e-8 * std::max(1.0, std::abs(a * x0)))
        throw std::invalid_argument(
            "theorem5_check: estimator not equivariant at (a, x(d), x(a d)) = (" +
            std::to_string(a) + ", " + std::to_string(x0) + ", " + std::to_string(xa) + ")");
    }
  }

  Theorem5Report report;
  report.problem = problem.name;
  report.loss = kind;
  report.thetas.assign(thetas.begin(), thetas.end());
  for (double theta : thetas)
    report.frequentist.push_back(
        frequentist_risk(problem.generate, problem.estimate, kind, theta, n_reps, rng));
  for (const auto& data : datasets) {
    const FiducialSampler sampler = problem.fiducial(data);
    report.fiducial.push_back(
        fiducial_risk(sampler, problem.estimate(data), kind, n_reps, rng));
  }

  report.pass = true;
  std::vector<RiskEstimate> all = report.frequentist;
  all.insert(all.end(), report.fiducial.begin(), report.fiducial.end());
  for (std::size_t i = 0; i < all.size() && report.pass; ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (!agree(all[i], all[j])) {
        report.pass = false;
        break;
      }
  return report;
}

}  // namespace fidres
