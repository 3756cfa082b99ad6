#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simplex_kde/dirichlet.hpp"
#include "simplex_kde/rng.hpp"
#include "simplex_kde/simplex.hpp"

namespace simplex_kde {

//! n independent sample_dirichlet draws.
CompositionSeries gen_iid(const DirichletParams& p, std::size_t n, Rng& rng);

//! Stationary strongly mixing sequence with exact Dirichlet marginals.
//!
//! Latent: d+1 independent Gaussian AR(1) chains z_t = rho z_{t-1} +
//! sqrt(1 - rho^2) e_t with unit stationary variance, started from the
//! stationary law (z_1 = e_1). Each z_{t,k} goes through Phi and the Gamma
//! quantile with shape u_k (v for the residual chain); the Gamma variates are
//! normalized and the residual dropped. The innovations e_t are drawn from
//! Rng(seed) in the same order sample_dirichlet uses, so rho = 0 reproduces
//! gen_iid(marginal, n, Rng(seed)) bit for bit. Mixing coefficients decay
//! geometrically in rho.
struct MixingProcessConfig {
  double rho = 0.0;
  DirichletParams marginal{{1.0, 1.0}, 1.0};
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

CompositionSeries gen_mixing_ar1(const MixingProcessConfig& cfg);

//! Sample autocorrelation of a coordinate (0-based) at lags 1..max_lag,
//!   r_k = sum_{t} (x_t - m)(x_{t+k} - m) / sum_t (x_t - m)^2.
std::vector<double> empirical_autocorr(const CompositionSeries& series,
                                       std::size_t coordinate, std::size_t max_lag);

}  // namespace simplex_kde
