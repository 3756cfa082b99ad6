#include "simplex_kde/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "simplex_kde/asymptotics.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/special.hpp"

namespace simplex_kde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// exponent * log(base) with 0^0 = 1; log_base may be -inf for a zero base.
double power_term(double exponent, double log_base) {
  if (exponent == 0.0) return 0.0;
  if (std::isinf(log_base)) return exponent > 0.0 ? -kInf : kInf;
  return exponent * log_base;
}

void check_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw Error(ErrorCode::NonPositiveShape, std::string(what) + " = " + std::to_string(x));
}

}  // namespace

DirichletParams::DirichletParams(std::vector<double> shape, double tail)
    : shape_(std::move(shape)), tail_(tail) {
  if (shape_.empty()) throw Error(ErrorCode::InvalidDimension, "Dirichlet needs d >= 1");
  for (double u : shape_) check_positive(u, "shape");
  check_positive(tail_, "tail shape");
}

double DirichletParams::total() const noexcept {
  double t = tail_;
  for (double u : shape_) t += u;
  return t;
}

double DirichletParams::log_normalizer() const {
  double out = special::log_gamma(total()) - special::log_gamma(tail_);
  for (double u : shape_) out -= special::log_gamma(u);
  return out;
}

KernelSpec::KernelSpec(SimplexPoint anchor, double bandwidth)
    : anchor_(std::move(anchor)), bandwidth_(bandwidth) {
  if (!(bandwidth_ > 0.0) || !std::isfinite(bandwidth_))
    throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(bandwidth_));
}

DirichletParams KernelSpec::params() const {
  std::vector<double> u(anchor_.dim());
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = anchor_[k] / bandwidth_ + 1.0;
  return DirichletParams(std::move(u), anchor_.residual() / bandwidth_ + 1.0);
}

double log_dirichlet_density(const DirichletParams& p, const SimplexPoint& x) {
  if (p.dim() != x.dim())
    throw Error(ErrorCode::DimensionMismatch, "parameters of dimension " + std::to_string(p.dim()) +
                                                  ", point of dimension " + std::to_string(x.dim()));
  std::vector<double> log_x(x.dim());
  double log_r = 0.0;
  detail::log_parts(x, log_x.data(), log_r);
  double out = p.log_normalizer() + power_term(p.tail() - 1.0, log_r);
  for (std::size_t k = 0; k < x.dim(); ++k) out += power_term(p.shape()[k] - 1.0, log_x[k]);
  return out;
}

double kappa(const KernelSpec& spec, const SimplexPoint& x) {
  if (spec.anchor().dim() != x.dim())
    throw Error(ErrorCode::DimensionMismatch, "anchor and point dimensions differ");
  const detail::KernelTerms terms(spec.anchor(), spec.bandwidth());
  std::vector<double> log_x(x.dim());
  double log_r = 0.0;
  detail::log_parts(x, log_x.data(), log_r);
  return std::exp(terms.log_kernel(log_x.data(), log_r));
}

double kappa_lq_norm_sq_asymptotic(const SimplexPoint& s, double b, double q) {
  if (!(q > 1.0) || !std::isfinite(q))
    throw Error(ErrorCode::InvalidExponent, "q = " + std::to_string(q) + ", need q > 1");
  if (!(b > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(b));
  const double d = static_cast<double>(s.dim());
  const double inv_p = (q - 1.0) / q;
  return std::pow(b, -d * inv_p) * std::pow(psi(s), 2.0 * inv_p) /
         (std::pow(2.0, -d * inv_p) * std::pow(q, d / q));
}

double kappa_sup_bound(const SimplexPoint& s, double b) {
  if (!(b > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(b));
  const double d = static_cast<double>(s.dim());
  return std::pow(kSupBoundBase, d) * std::pow(b, -d / 2.0) * psi(s);
}

SimplexPoint sample_dirichlet(const DirichletParams& p, Rng& rng) {
  std::vector<double> latent(p.dim() + 1);
  for (double& z : latent) z = rng.standard_normal();
  return detail::dirichlet_from_latent(p, latent);
}

namespace detail {

KernelTerms::KernelTerms(const SimplexPoint& s, double b) : exponents(s.dim()) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(b));
  double total = 0.0;
  double log_gammas = 0.0;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    exponents[k] = s[k] / b;
    total += exponents[k] + 1.0;
    log_gammas += special::log_gamma(exponents[k] + 1.0);
  }
  residual_exponent = s.residual() / b;
  total += residual_exponent + 1.0;
  log_norm = special::log_gamma(total) - special::log_gamma(residual_exponent + 1.0) - log_gammas;
}

double KernelTerms::log_kernel(const double* log_x, double log_residual) const {
  double out = log_norm + power_term(residual_exponent, log_residual);
  for (std::size_t k = 0; k < exponents.size(); ++k) out += power_term(exponents[k], log_x[k]);
  return out;
}

void log_parts(const SimplexPoint& x, double* log_x, double& log_residual) {
  for (std::size_t k = 0; k < x.dim(); ++k) log_x[k] = x[k] > 0.0 ? std::log(x[k]) : -kInf;
  const double r = x.residual();
  log_residual = r > 0.0 ? std::log(r) : -kInf;
}

SimplexPoint dirichlet_from_latent(const DirichletParams& p, std::span<const double> latent) {
  const std::size_t d = p.dim();
  if (latent.size() != d + 1)
    throw Error(ErrorCode::DimensionMismatch, "need d+1 latent values");
  std::vector<double> g(d + 1);
  double total = 0.0;
  for (std::size_t k = 0; k <= d; ++k) {
    const double shape = k < d ? p.shape()[k] : p.tail();
    g[k] = special::gamma_quantile_of_normal(shape, latent[k]);
    total += g[k];
  }
  g.pop_back();
  for (double& x : g) x /= total;
  return SimplexPoint(std::move(g));
}

}  // namespace detail

}  // namespace simplex_kde
