#include "simplex_kde/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "simplex_kde/asymptotics.hpp"
#include "simplex_kde/bandwidth.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/hdr.hpp"
#include "simplex_kde/kde.hpp"
#include "simplex_kde/parallel.hpp"
#include "simplex_kde/processes.hpp"
#include "simplex_kde/quadrature.hpp"
#include "simplex_kde/special.hpp"
#include "simplex_kde/stats.hpp"

namespace simplex_kde::verify {

namespace {

std::string point_label(const SimplexPoint& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.dim(); ++k) out += fmt::format("{}{:.4g}", k ? "," : "", s[k]);
  return out + ")";
}

std::string range_label(double lo, double hi) { return fmt::format("[{}, {}]", lo, hi); }

Metric within(std::string name, double value, double lo, double hi) {
  return {std::move(name), value, range_label(lo, hi), value >= lo && value <= hi};
}

Metric info(std::string name, double value) { return {std::move(name), value, "info", true}; }

// Integral of kappa_{s,b}(x)^q over S_d.
double kernel_power_integral(const SimplexPoint& s, double b, double q, double tolerance) {
  const detail::KernelTerms terms(s, b);
  auto integrand = [&](const SimplexPoint& x) {
    std::vector<double> lx(x.dim());
    double lr = 0.0;
    detail::log_parts(x, lx.data(), lr);
    return std::exp(q * terms.log_kernel(lx.data(), lr));
  };
  return quadrature::integrate_adaptive(integrand, s.dim(), s, tolerance);
}

}  // namespace

bool Report::passed() const {
  return std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.pass; });
}

std::string Report::to_json_lines() const {
  std::ostringstream out;
  for (const auto& m : metrics) {
    nlohmann::ordered_json line;
    line["suite"] = suite;
    line["metric"] = m.name;
    line["value"] = m.value;
    line["tolerance"] = m.tolerance;
    line["pass"] = m.pass;
    out << line.dump() << '\n';
  }
  return out.str();
}

Report verify_normalization(const NormalizationParams& params) {
  Report report{"normalization", {}};
  for (std::size_t d : params.dims) {
    Rng rng = Rng::substream(params.seed, d);
    std::vector<SimplexPoint> anchors;
    while (anchors.size() < params.anchors) {
      SimplexPoint s = sample_uniform(d, rng);
      if (s.is_interior()) anchors.push_back(std::move(s));
    }
    const double tolerance = d == 1 ? 1e-6 : 1e-3;
    for (double b : params.bandwidths) {
      std::vector<double> errors(anchors.size());
      parallel_for(anchors.size(), [&](std::size_t a) {
        errors[a] = std::abs(kernel_power_integral(anchors[a], b, 1.0, 1e-10) - 1.0);
      }, 1);
      const double worst = *std::max_element(errors.begin(), errors.end());
      report.metrics.push_back({fmt::format("d={} b={} max|integral-1|", d, b), worst,
                                fmt::format("<= {}", tolerance), worst <= tolerance});
    }
  }
  return report;
}

std::vector<SimplexPoint> norm_anchors(std::size_t d) {
  if (d == 1) return {barycenter(1), SimplexPoint({0.2})};
  if (d == 2) return {barycenter(2), SimplexPoint({0.1, 0.2})};
  throw Error(ErrorCode::InvalidDimension, "norm check supports d = 1, 2 only");
}

Report verify_norms(const NormsParams& params) {
  Report report{"norms", {}};
  for (std::size_t d : params.dims) {
    for (const SimplexPoint& s : norm_anchors(d)) {
      for (double q : params.orders) {
        std::vector<double> errors;
        for (double b : params.bandwidths) {
          const double norm_sq = std::pow(kernel_power_integral(s, b, q, 1e-12), 2.0 / q);
          const double ratio = norm_sq / kappa_lq_norm_sq_asymptotic(s, b, q);
          const double error = std::abs(ratio - 1.0);
          errors.push_back(error);
          report.metrics.push_back({fmt::format("d={} s={} q={} b={} |ratio-1|", d,
                                                point_label(s), q, b),
                                    error, fmt::format("<= {}", params.slack * b),
                                    error <= params.slack * b});
        }
        // Largest ratio of consecutive errors; below one means strictly decreasing.
        double worst_step = 0.0;
        for (std::size_t k = 1; k < errors.size(); ++k)
          worst_step = std::max(worst_step, errors[k] / errors[k - 1]);
        report.metrics.push_back({fmt::format("d={} s={} q={} error decreasing in b (max step ratio)",
                                              d, point_label(s), q),
                                  worst_step, "< 1", worst_step < 1.0});
      }
    }
  }
  return report;
}

Report verify_mse(const MseParams& params) {
  Report report{"mse", {}};
  const std::size_t d = params.target.dim();
  const SimplexPoint s = params.point.value_or(barycenter(d));
  const DensityModel f = DensityModel::dirichlet(params.target);
  const double truth = f.value(s);

  std::vector<double> log_n, log_mse;
  double last_ratio = 0.0;
  for (std::size_t k = 0; k < params.sizes.size(); ++k) {
    const std::size_t n = params.sizes[k];
    const double b = std::pow(static_cast<double>(n), -params.bandwidth_exponent);
    std::vector<double> squared(params.replicates);
    parallel_for(params.replicates, [&](std::size_t r) {
      const MixingProcessConfig cfg{params.rho, params.target, n,
                                    derive_seed(derive_seed(params.seed, k), r)};
      const KdeModel model = KdeModel::fit(gen_mixing_ar1(cfg), b);
      const double e = model.evaluate(s) - truth;
      squared[r] = e * e;
    }, 1);
    const double mse = stats::mean(squared);
    const MseExpansion theory = mse_expansion(f, s, n, b);
    last_ratio = mse / theory.total;
    log_n.push_back(std::log(static_cast<double>(n)));
    log_mse.push_back(std::log(mse));
    report.metrics.push_back(info(fmt::format("n={} b={:.5g} empirical MSE", n, b), mse));
    report.metrics.push_back(info(fmt::format("n={} leading-order MSE", n), theory.total));
  }
  const double target = -4.0 / static_cast<double>(d + 4);
  report.metrics.push_back(within("log-log slope of MSE vs n", stats::ols_slope(log_n, log_mse),
                                  target - params.slope_tolerance, target + params.slope_tolerance));
  report.metrics.push_back(within(fmt::format("empirical/theoretical MSE at n={}", params.sizes.back()),
                                  last_ratio, params.ratio_lo, params.ratio_hi));
  return report;
}

CltOutcome run_clt(const CltParams& params) {
  CltOutcome out{{"clt", {}}, {"coverage", {}}};
  const std::size_t d = params.target.dim();
  const SimplexPoint s = params.point.value_or(barycenter(d));
  const DensityModel f = DensityModel::dirichlet(params.target);
  const double truth = f.value(s);
  const double n = static_cast<double>(params.n);
  const double b = std::pow(n, -params.bandwidth_exponent);
  const double scale = std::sqrt(n) * std::pow(b, static_cast<double>(d) / 4.0) /
                       std::sqrt(psi(s) * truth);

  for (std::size_t k = 0; k < params.rhos.size(); ++k) {
    const double rho = params.rhos[k];
    std::vector<double> standardized(params.replicates);
    std::vector<double> covered(params.replicates);
    parallel_for(params.replicates, [&](std::size_t r) {
      const MixingProcessConfig cfg{rho, params.target, params.n,
                                    derive_seed(derive_seed(params.seed, k), r)};
      const double fhat = KdeModel::fit(gen_mixing_ar1(cfg), b).evaluate(s);
      standardized[r] = scale * (fhat - truth);
      const ConfidenceInterval ci = confidence_interval(fhat, s, params.n, b, params.conf_alpha);
      covered[r] = (ci.lo <= truth && truth <= ci.hi) ? 1.0 : 0.0;
    }, 1);
    const double ks = stats::ks_statistic(standardized, special::normal_cdf);
    const double p = stats::ks_pvalue(ks, standardized.size());
    out.clt.metrics.push_back(info(fmt::format("rho={} mean of standardized statistic", rho),
                                   stats::mean(standardized)));
    out.clt.metrics.push_back(info(fmt::format("rho={} variance of standardized statistic", rho),
                                   stats::variance(standardized)));
    out.clt.metrics.push_back({fmt::format("rho={} KS p-value vs N(0,1)", rho), p,
                               fmt::format(">= {}", params.ks_level), p >= params.ks_level});
    out.coverage.metrics.push_back(
        within(fmt::format("rho={} coverage of {}% interval", rho, 100.0 * (1.0 - params.conf_alpha)),
               stats::mean(covered), params.coverage_lo, params.coverage_hi));
  }
  return out;
}

Report verify_hdr(const HdrParams& params) {
  Report report{"hdr", {}};
  {
    Rng data_rng = Rng::substream(params.seed, 0);
    const KdeModel model =
        KdeModel::fit(gen_iid(DirichletParams({1.0, 1.0}, 1.0), params.n, data_rng), params.bandwidth);
    Rng mc_rng = Rng::substream(params.seed, 1);
    const HdrResult hdr = hdr_threshold(model, params.level, params.mc_points, mc_rng);
    report.metrics.push_back(within("uniform target threshold", hdr.threshold, params.uniform_lo,
                                    params.uniform_hi));
  }
  {
    Rng data_rng = Rng::substream(params.seed, 2);
    const KdeModel model =
        KdeModel::fit(gen_iid(DirichletParams({2.0, 2.0}, 2.0), params.n, data_rng), params.bandwidth);
    Rng mc_rng = Rng::substream(params.seed, 3);
    const HdrResult hdr = hdr_threshold(model, params.level, params.mc_points, mc_rng);

    // Oracle: bisection on t for sum_{f >= t} f w / sum f w = level over the lattice.
    const quadrature::Rule lattice = quadrature::triangle_centroid_lattice(params.oracle_resolution);
    const std::vector<double> values = model.evaluate_batch(lattice.nodes);
    std::vector<double> weighted(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) weighted[i] = values[i] * lattice.weights[i];
    const double total = stats::pairwise_sum(weighted);
    auto mass_above = [&](double t) {
      std::vector<double> kept(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) kept[i] = values[i] >= t ? weighted[i] : 0.0;
      return stats::pairwise_sum(kept) / total;
    };
    double lo = 0.0;
    double hi = *std::max_element(values.begin(), values.end());
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (mass_above(mid) >= params.level ? lo : hi) = mid;
    }
    report.metrics.push_back(info("Dirichlet(2,2;2) Monte Carlo threshold", hdr.threshold));
    report.metrics.push_back(info("Dirichlet(2,2;2) lattice-quadrature threshold", lo));
    report.metrics.push_back({"Dirichlet(2,2;2) relative difference to quadrature",
                              std::abs(hdr.threshold - lo) / lo,
                              fmt::format("<= {}", params.oracle_tolerance),
                              std::abs(hdr.threshold - lo) / lo <= params.oracle_tolerance});
  }
  return report;
}

Report verify_lscv(const LscvParams& params) {
  Report report{"lscv", {}};
  Rng data_rng = Rng::substream(params.seed, 0);
  const CompositionSeries data = gen_iid(DirichletParams({1.0, 1.0}, 1.0), params.n, data_rng);
  LscvConfig cfg;
  cfg.mc_points = params.mc_points;
  if (!params.grid.empty()) cfg.grid = params.grid;
  cfg.seed = derive_seed(params.seed, 1);
  const BandwidthSelection selection = select_bandwidth(data, cfg);

  const quadrature::Rule rule = quadrature::composite_gauss_legendre(2, params.ise_panels, params.ise_order);
  constexpr double kTruth = 2.0;  // uniform density on S_2
  std::vector<double> truth_sq(rule.weights.size());
  for (std::size_t i = 0; i < truth_sq.size(); ++i) truth_sq[i] = rule.weights[i] * kTruth * kTruth;
  const double f_sq = stats::pairwise_sum(truth_sq);

  const KdeModel base = KdeModel::fit(data, cfg.grid.front());
  std::vector<double> ise(cfg.grid.size());
  std::vector<double> shifted(cfg.grid.size());
  for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
    const std::vector<double> values = base.with_bandwidth(cfg.grid[k]).evaluate_batch(rule.nodes);
    std::vector<double> terms(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      terms[i] = rule.weights[i] * (values[i] - kTruth) * (values[i] - kTruth);
    ise[k] = stats::pairwise_sum(terms);
    shifted[k] = selection.curve[k].criterion + f_sq;
  }
  const std::size_t ise_argmin =
      static_cast<std::size_t>(std::min_element(ise.begin(), ise.end()) - ise.begin());
  const std::size_t lscv_argmin = static_cast<std::size_t>(
      std::find(cfg.grid.begin(), cfg.grid.end(), selection.b_star) - cfg.grid.begin());
  const double distance = std::abs(static_cast<double>(ise_argmin) - static_cast<double>(lscv_argmin));

  report.metrics.push_back(info("b* (LSCV_MC argmin)", selection.b_star));
  report.metrics.push_back(info("ISE argmin", cfg.grid[ise_argmin]));
  report.metrics.push_back({"grid steps between b* and ISE argmin", distance,
                            fmt::format("<= {}", params.max_step_distance),
                            distance <= static_cast<double>(params.max_step_distance)});
  const double corr = stats::pearson_correlation(shifted, ise);
  report.metrics.push_back({"correlation(LSCV_MC + int f^2, ISE)", corr,
                            fmt::format(">= {}", params.min_correlation), corr >= params.min_correlation});
  return report;
}

}  // namespace simplex_kde::verify
