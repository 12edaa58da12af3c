#ifndef FIDRES_QUADRATURE_HPP
#define FIDRES_QUADRATURE_HPP

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace fidres {

/// Adaptive tanh-sinh integral of f over [a, b]; robust to endpoint
/// singularities (the correlation density has square-root behaviour at
/// rho = +-1).
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-10) {
  thread_local boost::math::quadrature::tanh_sinh<double> quad;
  return quad.integrate(f, a, b, tol);
}

/// Solve cdf(x) = p on [lo, hi] by bisection refined with secant steps.
/// cdf must be nondecreasing with cdf(lo) <= p <= cdf(hi).
inline double invert_cdf(const std::function<double(double)>& cdf, double p,
                         double lo, double hi, double tol = 1e-10) {
  double flo = cdf(lo) - p;
  double fhi = cdf(hi) - p;
  if (flo > 0.0 || fhi < 0.0)
    throw std::domain_error("invert_cdf: root not bracketed");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double fx = cdf(x) - p;
    if (std::abs(fx) <= tol || hi - lo < 1e-15 * std::max(1.0, std::abs(x)))
      return x;
    if (fx > 0.0) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
    // secant guess on even iterations; forced bisection on odd ones so the
    // bracket halves even when the cdf is flat near one endpoint
    double xs = 0.5 * (lo + hi);
    if (it % 2 == 0 && flo != fhi) {
      const double sec = lo - flo * (hi - lo) / (fhi - flo);
      if (sec > lo && sec < hi) xs = sec;
    }
    x = xs;
  }
  return x;
}

}  // namespace fidres

#endif
