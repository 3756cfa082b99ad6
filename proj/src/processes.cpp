#include "simplex_kde/processes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplex_kde/error.hpp"
#include "simplex_kde/stats.hpp"

namespace simplex_kde {

CompositionSeries gen_iid(const DirichletParams& p, std::size_t n, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::EmptyData, "n must be >= 1");
  std::vector<SimplexPoint> points;
  points.reserve(n);
  for (std::size_t t = 0; t < n; ++t) points.push_back(sample_dirichlet(p, rng));
  return CompositionSeries(std::move(points));
}

CompositionSeries gen_mixing_ar1(const MixingProcessConfig& cfg) {
  if (!(std::abs(cfg.rho) < 1.0))
    throw Error(ErrorCode::InvalidRho, "rho = " + std::to_string(cfg.rho) + ", need |rho| < 1");
  if (cfg.n < 1) throw Error(ErrorCode::EmptyData, "n must be >= 1");

  const std::size_t parts = cfg.marginal.dim() + 1;
  const double innovation_scale = std::sqrt(1.0 - cfg.rho * cfg.rho);
  Rng rng(cfg.seed);
  std::vector<double> latent(parts);
  std::vector<SimplexPoint> points;
  points.reserve(cfg.n);
  for (std::size_t t = 0; t < cfg.n; ++t) {
    for (double& z : latent) {
      const double e = rng.standard_normal();
      z = t == 0 ? e : cfg.rho * z + innovation_scale * e;
    }
    points.push_back(detail::dirichlet_from_latent(cfg.marginal, latent));
  }
  return CompositionSeries(std::move(points));
}

std::vector<double> empirical_autocorr(const CompositionSeries& series, std::size_t coordinate,
                                       std::size_t max_lag) {
  const std::size_t n = series.size();
  if (max_lag < 1 || max_lag >= n)
    throw Error(ErrorCode::LagTooLarge,
                "need 1 <= max_lag < n (max_lag " + std::to_string(max_lag) + ", n " +
                    std::to_string(n) + ")");
  if (coordinate >= series.dim())
    throw Error(ErrorCode::IndexOutOfRange, "coordinate " + std::to_string(coordinate));

  std::vector<double> x(n);
  for (std::size_t t = 0; t < n; ++t) x[t] = series[t][coordinate];
  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); }))
    throw Error(ErrorCode::ZeroVariance, "series coordinate is constant");
  const double m = stats::mean(x);
  double denom = 0.0;
  for (double& v : x) {
    v -= m;
    denom += v * v;
  }

  std::vector<double> out(max_lag);
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = 0; t + k < n; ++t) num += x[t] * x[t + k];
    out[k - 1] = num / denom;
  }
  return out;
}

}  // namespace simplex_kde
