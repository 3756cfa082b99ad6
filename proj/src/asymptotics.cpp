#include "simplex_kde/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "simplex_kde/error.hpp"
#include "simplex_kde/parallel.hpp"
#include "simplex_kde/special.hpp"

namespace simplex_kde {

namespace {

void require_interior(const SimplexPoint& s) {
  if (!s.is_interior()) throw Error(ErrorCode::BoundaryPoint, "point must lie in Int(S_d)");
}

// All lattice points {k / R : k_i >= 0, sum k_i <= R} in lexicographic order.
void enumerate_lattice(std::size_t d, std::size_t resolution, std::vector<std::size_t>& prefix,
                       std::size_t used, std::vector<SimplexPoint>& out) {
  if (prefix.size() == d) {
    std::vector<double> coords(d);
    for (std::size_t k = 0; k < d; ++k)
      coords[k] = static_cast<double>(prefix[k]) / static_cast<double>(resolution);
    out.emplace_back(std::move(coords));
    return;
  }
  for (std::size_t k = 0; k + used <= resolution; ++k) {
    prefix.push_back(k);
    enumerate_lattice(d, resolution, prefix, used + k, out);
    prefix.pop_back();
  }
}

}  // namespace

DensityModel DensityModel::dirichlet(const DirichletParams& p) {
  DensityModel f;
  f.dim = p.dim();
  f.value = [p](const SimplexPoint& s) { return std::exp(log_dirichlet_density(p, s)); };
  // d log f / ds_i = (u_i - 1)/s_i - (v - 1)/r
  auto log_gradient = [p](const SimplexPoint& s) {
    const double r = s.residual();
    Vector g(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
      g[i] = (p.shape()[i] - 1.0) / s[i] - (p.tail() - 1.0) / r;
    return g;
  };
  f.gradient = [p, log_gradient](const SimplexPoint& s) {
    require_interior(s);
    const double value = std::exp(log_dirichlet_density(p, s));
    Vector g = log_gradient(s);
    for (double& x : g) x *= value;
    return g;
  };
  f.hessian = [p, log_gradient](const SimplexPoint& s) {
    require_interior(s);
    const double value = std::exp(log_dirichlet_density(p, s));
    const Vector l = log_gradient(s);
    const double r = s.residual();
    const std::size_t d = p.dim();
    Matrix h(d, Vector(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        double dl = -(p.tail() - 1.0) / (r * r);
        if (i == j) dl -= (p.shape()[i] - 1.0) / (s[i] * s[i]);
        h[i][j] = value * (l[i] * l[j] + dl);
      }
    }
    return h;
  };
  return f;
}

double psi(const SimplexPoint& s) {
  require_interior(s);
  const double d = static_cast<double>(s.dim());
  double prod = s.residual();
  for (double c : s.coords()) prod *= c;
  return std::pow(4.0 * std::numbers::pi, -d / 2.0) / std::sqrt(prod);
}

double bias_functional_g(const DensityModel& f, const SimplexPoint& s) {
  require_interior(s);
  if (f.dim != s.dim()) throw Error(ErrorCode::DimensionMismatch, "density and point dimensions differ");
  const std::size_t d = s.dim();
  const auto grad = f.gradient(s);
  const auto hess = f.hessian(s);
  double first = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    first += (1.0 - static_cast<double>(d + 1) * s[i]) * grad[i];
    for (std::size_t j = 0; j < d; ++j)
      second += s[i] * ((i == j ? 1.0 : 0.0) - s[j]) * hess[i][j];
  }
  return first + 0.5 * second;
}

MseExpansion mse_expansion(const DensityModel& f, const SimplexPoint& s, std::size_t n, double b) {
  if (n < 1) throw Error(ErrorCode::EmptyData, "n must be >= 1");
  if (!(b > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(b));
  const double g = bias_functional_g(f, s);
  const double d = static_cast<double>(s.dim());
  MseExpansion out{};
  out.bias_term = b * b * g * g;
  out.variance_term = std::pow(b, -d / 2.0) * psi(s) * f.value(s) / static_cast<double>(n);
  out.total = out.bias_term + out.variance_term;
  return out;
}

ConfidenceInterval confidence_interval(double fhat, const SimplexPoint& s, std::size_t n, double b,
                                       double conf_alpha) {
  if (!(conf_alpha > 0.0 && conf_alpha <= 1.0))
    throw Error(ErrorCode::InvalidLevel, "alpha = " + std::to_string(conf_alpha) + ", need (0, 1]");
  if (!(fhat >= 0.0)) throw Error(ErrorCode::InvalidArgument, "estimate must be >= 0");
  if (n < 1) throw Error(ErrorCode::EmptyData, "n must be >= 1");
  if (!(b > 0.0)) throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(b));
  const double d = static_cast<double>(s.dim());
  const double z = special::normal_quantile(1.0 - conf_alpha / 2.0);
  const double half = z * std::sqrt(psi(s) * fhat) / std::sqrt(static_cast<double>(n)) *
                      std::pow(b, -d / 4.0);
  return {fhat - half, fhat + half};
}

RegimeReport check_bandwidth_regime(std::size_t n, double b, std::size_t d,
                                    const RegimeThresholds& thresholds) {
  const double dd = static_cast<double>(d);
  const double nn = static_cast<double>(n);
  RegimeReport r{};
  r.n_b_half_d = nn * std::pow(b, dd / 2.0);
  r.root_n_b_bias = std::sqrt(nn) * std::pow(b, dd / 4.0 + 0.5);
  r.bandwidth_small = b <= thresholds.bandwidth_max;
  r.variance_vanishes = r.n_b_half_d >= thresholds.variance_min;
  r.bias_negligible = r.root_n_b_bias <= thresholds.bias_max;
  return r;
}

SimplexPoint mode_estimate(const KdeModel& model, std::size_t grid_resolution, int refine_steps) {
  if (grid_resolution < 2) throw Error(ErrorCode::InvalidArgument, "grid resolution must be >= 2");
  const std::size_t d = model.dim();
  std::vector<SimplexPoint> lattice;
  std::vector<std::size_t> prefix;
  enumerate_lattice(d, grid_resolution, prefix, 0, lattice);
  const std::vector<double> values = model.evaluate_batch(lattice);

  std::size_t best_index = 0;
  for (std::size_t m = 1; m < values.size(); ++m)
    if (values[m] > values[best_index]) best_index = m;

  std::vector<double> best(lattice[best_index].coords().begin(), lattice[best_index].coords().end());
  double best_value = values[best_index];
  double step = 1.0 / static_cast<double>(grid_resolution);
  for (int pass = 0; pass < refine_steps; ++pass) {
    bool improved = false;
    for (std::size_t k = 0; k < d; ++k) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> candidate = best;
        candidate[k] += sign * step;
        if (candidate[k] < 0.0) continue;
        double sum = 0.0;
        for (double c : candidate) sum += c;
        if (sum > 1.0) continue;
        const double value = model.evaluate(SimplexPoint(candidate));
        if (value > best_value) {
          best_value = value;
          best = std::move(candidate);
          improved = true;
        }
      }
    }
    if (!improved) step /= 2.0;
  }
  return SimplexPoint(std::move(best));
}

}  // namespace simplex_kde
