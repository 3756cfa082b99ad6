#include "simplex_kde/special.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace simplex_kde::special {

namespace {
const boost::math::normal_distribution<double> kStandardNormal{};
}

double log_gamma(double x) { return boost::math::lgamma(x); }

double normal_cdf(double z) {
  if (std::isinf(z)) return z > 0 ? 1.0 : 0.0;
  return boost::math::cdf(kStandardNormal, z);
}

double normal_sf(double z) {
  if (std::isinf(z)) return z > 0 ? 0.0 : 1.0;
  return boost::math::cdf(boost::math::complement(kStandardNormal, z));
}

double normal_quantile(double p) {
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return boost::math::quantile(kStandardNormal, p);
}

double gamma_quantile_of_normal(double shape, double z) {
  if (z < 0.0) {
    const double p = normal_cdf(z);
    if (p <= 0.0) return 0.0;
    if (shape == 1.0) return -std::log1p(-p);
    return boost::math::gamma_p_inv(shape, p);
  }
  const double q = normal_sf(z);
  if (q <= 0.0) return std::numeric_limits<double>::infinity();
  if (shape == 1.0) return -std::log(q);
  return boost::math::gamma_q_inv(shape, q);
}

double beta_cdf(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

}  // namespace simplex_kde::special
