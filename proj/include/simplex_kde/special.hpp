#pragma once

namespace simplex_kde::special {

double log_gamma(double x);

double normal_cdf(double z);
//! Upper tail 1 - Phi(z) without cancellation.
double normal_sf(double z);
double normal_quantile(double p);

//! Gamma(shape, 1) quantile of Phi(z), evaluated from whichever tail of z is
//! smaller so that extreme latent values keep full relative accuracy.
double gamma_quantile_of_normal(double shape, double z);

double beta_cdf(double a, double b, double x);

}  // namespace simplex_kde::special
