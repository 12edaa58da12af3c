#include "fidres/linpred.hpp"

#include <limits>

namespace fidres {

void LinearModel::validate() const {
  if (design.rows() < 1 || design.cols() < 1)
    throw std::domain_error("LinearModel: empty design");
  if (observation.size() != design.rows())
    throw std::domain_error("LinearModel: observation length mismatch");
}

namespace {

Eigen::BDCSVD<Eigen::MatrixXd> svd_of(const Eigen::MatrixXd& x) {
  return Eigen::BDCSVD<Eigen::MatrixXd>(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

Eigen::Index numerical_rank(const Eigen::BDCSVD<Eigen::MatrixXd>& svd,
                            Eigen::Index m, Eigen::Index p) {
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double tol = static_cast<double>(std::max(m, p)) *
                     std::numeric_limits<double>::epsilon() * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol) ++r;
  return r;
}

}  // namespace

Projection projection(const Eigen::MatrixXd& design) {
  if (design.rows() < 1 || design.cols() < 1)
    throw std::domain_error("projection: empty design");
  const auto svd = svd_of(design);
  const Eigen::Index r = numerical_rank(svd, design.rows(), design.cols());
  Projection out;
  out.rank = r;
  if (r == 0) {
    out.matrix = Eigen::MatrixXd::Zero(design.rows(), design.rows());
  } else {
    const Eigen::MatrixXd u = svd.matrixU().leftCols(r);
    out.matrix = u * u.transpose();
  }
  return out;
}

std::vector<Eigen::VectorXd> fiducial_theta_sample(const LinearModel& model,
                                                   RngStream& rng,
                                                   std::size_t count) {
  model.validate();
  if (count < 1) throw std::domain_error("fiducial_theta_sample: count must be >= 1");
  const Eigen::MatrixXd p = projection(model.design).matrix;
  const Eigen::VectorXd py = p * model.observation;
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  Eigen::VectorXd u(model.design.rows());
  for (std::size_t i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < u.size(); ++j) u(j) = rng.normal();
    out.push_back(py - p * u);
  }
  return out;
}

Eigen::VectorXd optimal_estimate(const Eigen::MatrixXd& a_map,
                                 const LinearModel& model) {
  model.validate();
  if (a_map.cols() != model.design.rows())
    throw std::domain_error("optimal_estimate: A must act on the ambient space");
  const Eigen::MatrixXd p = projection(model.design).matrix;
  return a_map * (p * model.observation);
}

Eigen::VectorXd min_norm_coefficients(const LinearModel& model) {
  model.validate();
  const auto svd = svd_of(model.design);
  const Eigen::Index r =
      numerical_rank(svd, model.design.rows(), model.design.cols());
  if (r == 0) return Eigen::VectorXd::Zero(model.design.cols());
  const auto& s = svd.singularValues();
  Eigen::VectorXd z = svd.matrixU().leftCols(r).transpose() * model.observation;
  for (Eigen::Index i = 0; i < r; ++i) z(i) /= s(i);
  return svd.matrixV().leftCols(r) * z;
}

double predict(const Eigen::VectorXd& x_star, const LinearModel& model) {
  model.validate();
  if (x_star.size() != model.design.cols())
    throw std::domain_error("predict: x* length must equal the design column count");
  return x_star.dot(min_norm_coefficients(model));
}

}  // namespace fidres
