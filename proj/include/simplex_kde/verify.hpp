#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplex_kde/dirichlet.hpp"
#include "simplex_kde/simplex.hpp"

// Simulation and quadrature experiments that check the estimator's
// asymptotic claims at finite n. Shared by the CLI `verify` command and the
// acceptance test binary.
namespace simplex_kde::verify {

struct Metric {
  std::string name;
  double value;
  std::string tolerance;
  bool pass;
};

struct Report {
  std::string suite;
  std::vector<Metric> metrics;

  bool passed() const;
  //! One JSON object per line: suite, metric, value, tolerance, pass.
  std::string to_json_lines() const;
};

// Kernel normalization: quadrature of kappa_{s,b} over S_d at random interior
// anchors.
struct NormalizationParams {
  std::vector<std::size_t> dims{1, 2};
  std::vector<double> bandwidths{0.5, 0.1, 0.02};
  std::size_t anchors = 50;
  std::uint64_t seed = 1;
};
Report verify_normalization(const NormalizationParams& params);

// Squared L^q norm of kappa by quadrature against its leading-order formula.
struct NormsParams {
  std::vector<std::size_t> dims{1, 2};
  std::vector<double> orders{1.5, 2.0, 3.0};
  std::vector<double> bandwidths{0.2, 0.1, 0.05, 0.025};
  //! |ratio - 1| must not exceed slack * b.
  double slack = 0.5;
};
//! Anchors per dimension: the barycenter and (0.2) for d = 1, (0.1, 0.2) for d = 2.
std::vector<SimplexPoint> norm_anchors(std::size_t d);
Report verify_norms(const NormsParams& params);

// Empirical MSE at a point against the leading-order expansion.
struct MseParams {
  DirichletParams target{{2.0, 2.0}, 2.0};
  std::optional<SimplexPoint> point;  // barycenter when empty
  std::vector<std::size_t> sizes{500, 2000, 8000, 32000};
  std::size_t replicates = 300;
  double bandwidth_exponent = 1.0 / 3.0;  // b = n^{-exponent}
  double rho = 0.0;
  double slope_tolerance = 0.15;
  double ratio_lo = 0.6;
  double ratio_hi = 1.7;
  std::uint64_t seed = 1;
};
Report verify_mse(const MseParams& params);

// Standardized estimator n^{1/2} b^{d/4} (fhat - f) / sqrt(psi f) against
// N(0, 1), and coverage of the plug-in interval, per mixing level rho.
struct CltParams {
  DirichletParams target{{1.0, 1.0}, 1.0};
  std::optional<SimplexPoint> point;
  std::size_t n = 20000;
  double bandwidth_exponent = 0.55;
  std::size_t replicates = 500;
  std::vector<double> rhos{0.0, 0.5};
  double ks_level = 0.01;
  double conf_alpha = 0.05;
  double coverage_lo = 0.91;
  double coverage_hi = 0.98;
  std::uint64_t seed = 1;
};
struct CltOutcome {
  Report clt;
  Report coverage;
};
CltOutcome run_clt(const CltParams& params);

// HDR threshold of a uniform-target fit, and Monte Carlo vs lattice quadrature
// for a Dirichlet(2,2;2) fit.
struct HdrParams {
  std::size_t n = 10000;
  double bandwidth = 0.05;
  double level = 0.95;
  std::size_t mc_points = 10000;
  std::size_t oracle_resolution = 800;
  double uniform_lo = 1.90;
  double uniform_hi = 2.10;
  double oracle_tolerance = 0.03;
  std::uint64_t seed = 1;
};
Report verify_hdr(const HdrParams& params);

// LSCV_MC curve against the quadrature ISE curve for uniform-target data.
struct LscvParams {
  std::size_t n = 500;
  std::size_t mc_points = 1000;
  std::vector<double> grid;  // default grid when empty
  std::size_t max_step_distance = 2;
  double min_correlation = 0.9;
  std::size_t ise_panels = 80;
  std::size_t ise_order = 3;
  std::uint64_t seed = 1;
};
Report verify_lscv(const LscvParams& params);

}  // namespace simplex_kde::verify
