#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simplex_kde/rng.hpp"
#include "simplex_kde/simplex.hpp"

namespace simplex_kde {

//! Dirichlet(u, v) on S_d: shape u for the d free coordinates, v for the
//! implicit residual part.
class DirichletParams {
 public:
  DirichletParams(std::vector<double> shape, double tail);

  std::size_t dim() const noexcept { return shape_.size(); }
  const std::vector<double>& shape() const noexcept { return shape_; }
  double tail() const noexcept { return tail_; }
  //! log Gamma(|u|_1 + v) - log Gamma(v) - sum log Gamma(u_k).
  double log_normalizer() const;
  //! Marginal of coordinate k is Beta(u_k, |u|_1 + v - u_k).
  double total() const noexcept;

 private:
  std::vector<double> shape_;
  double tail_;
};

//! The estimator kernel kappa_{s,b}: Dirichlet(s/b + 1, (1 - |s|_1)/b + 1).
class KernelSpec {
 public:
  KernelSpec(SimplexPoint anchor, double bandwidth);

  const SimplexPoint& anchor() const noexcept { return anchor_; }
  double bandwidth() const noexcept { return bandwidth_; }
  DirichletParams params() const;

 private:
  SimplexPoint anchor_;
  double bandwidth_;
};

//! Log-density of Dirichlet(u, v) at x, evaluated through log-gamma.
//! An exponent of exactly zero contributes nothing even on a zero base
//! (0^0 = 1); a positive exponent on a zero base gives -infinity.
double log_dirichlet_density(const DirichletParams& p, const SimplexPoint& x);

//! kappa_{s,b}(x). Defined for boundary anchors through the 0^0 convention.
double kappa(const KernelSpec& spec, const SimplexPoint& x);

//! Leading term of ||kappa_{s,b}||_q^2 as b -> 0:
//!   b^{-d/p} psi(s)^{2/p} / (2^{-d/p} q^{d/q}),   1/p + 1/q = 1.
//! Requires s interior and q > 1.
double kappa_lq_norm_sq_asymptotic(const SimplexPoint& s, double b, double q);

//! Base of the calibrated constant in kappa_sup_bound: C_d = 1.65^d.
inline constexpr double kSupBoundBase = 1.65;
//! Largest bandwidth for which the calibration holds (d <= 3).
inline constexpr double kSupBoundMaxBandwidth = 0.1;

//! C_d * b^{-d/2} * psi(s), an upper bound on max_x kappa_{s,b}(x).
//! The constant was calibrated on a lattice of interior anchors for d <= 3
//! and 1e-3 <= b <= kSupBoundMaxBandwidth; outside that range it is the same
//! expression without the guarantee.
double kappa_sup_bound(const SimplexPoint& s, double b);

//! Exact draw: d+1 independent Gamma variates normalized to sum one. Each
//! Gamma variate is the Gamma quantile of Phi(z) for one standard normal z
//! drawn from `rng`, in coordinate order with the residual part last.
SimplexPoint sample_dirichlet(const DirichletParams& p, Rng& rng);

namespace detail {

//! Kernel exponents and log normalizing constant of kappa_{s,b}; shared by
//! kappa() and the estimator so both evaluate the same arithmetic.
struct KernelTerms {
  std::vector<double> exponents;  // s_k / b
  double residual_exponent = 0.0;  // (1 - |s|_1) / b
  double log_norm = 0.0;

  KernelTerms(const SimplexPoint& s, double b);

  //! Log kernel at a point given its log coordinates and log residual.
  double log_kernel(const double* log_x, double log_residual) const;
};

//! log of each coordinate and of the residual; -inf for zero parts.
void log_parts(const SimplexPoint& x, double* log_x, double& log_residual);

//! Dirichlet point from d+1 latent standard-normal values (residual last):
//! Gamma quantiles of Phi(z_k), normalized, residual dropped.
SimplexPoint dirichlet_from_latent(const DirichletParams& p, std::span<const double> latent);

}  // namespace detail

}  // namespace simplex_kde
