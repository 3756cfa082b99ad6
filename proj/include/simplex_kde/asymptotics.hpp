#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "simplex_kde/dirichlet.hpp"
#include "simplex_kde/kde.hpp"
#include "simplex_kde/simplex.hpp"

namespace simplex_kde {

//! Target density with first and second derivatives in the d free coordinates.
//! The callbacks must be reentrant.
struct DensityModel {
  using Vector = std::vector<double>;
  using Matrix = std::vector<std::vector<double>>;

  std::size_t dim = 0;
  std::function<double(const SimplexPoint&)> value;
  std::function<Vector(const SimplexPoint&)> gradient;
  std::function<Matrix(const SimplexPoint&)> hessian;

  //! Dirichlet(u, v) density with analytic derivatives (interior points).
  static DensityModel dirichlet(const DirichletParams& p);
};

//! psi(s) = (4 pi)^{-d/2} / sqrt((1 - |s|_1) prod s_i). Throws BoundaryPoint.
double psi(const SimplexPoint& s);

//! g(s) = sum_i (1 - (d+1) s_i) df/ds_i
//!        + 1/2 sum_{i,j} s_i (1{i=j} - s_j) d2f/ds_i ds_j.
double bias_functional_g(const DensityModel& f, const SimplexPoint& s);

struct MseExpansion {
  double bias_term;      // b^2 g(s)^2
  double variance_term;  // n^-1 b^{-d/2} psi(s) f(s)
  double total;
};

//! Leading terms of the pointwise MSE; remainders are not modelled.
MseExpansion mse_expansion(const DensityModel& f, const SimplexPoint& s, std::size_t n,
                           double b);

struct ConfidenceInterval {
  double lo;
  double hi;
};

//! fhat -/+ Phi^{-1}(1 - conf_alpha/2) sqrt(psi(s) fhat) n^{-1/2} b^{-d/4}.
//! conf_alpha must lie in (0, 1]; the lower end is not clipped at zero.
ConfidenceInterval confidence_interval(double fhat, const SimplexPoint& s, std::size_t n,
                                       double b, double conf_alpha);

//! Finite-n proxies of the bandwidth regime b -> 0, n b^{d/2} -> inf,
//! n^{1/2} b^{d/4 + 1/2} -> 0. Advisory only.
struct RegimeThresholds {
  double bandwidth_max = 0.5;
  double variance_min = 10.0;  // lower bound on n b^{d/2}
  double bias_max = 1.0;       // upper bound on n^{1/2} b^{d/4 + 1/2}
};

struct RegimeReport {
  bool bandwidth_small;   // b <= bandwidth_max
  bool variance_vanishes; // n b^{d/2} >= variance_min
  bool bias_negligible;   // n^{1/2} b^{d/4+1/2} <= bias_max
  double n_b_half_d;
  double root_n_b_bias;

  bool all() const noexcept { return bandwidth_small && variance_vanishes && bias_negligible; }
};

RegimeReport check_bandwidth_regime(std::size_t n, double b, std::size_t d,
                                    const RegimeThresholds& thresholds = {});

//! argmax of the estimator over S_d: sweep of the lattice {k / R : sum k <= R},
//! then coordinate moves of size 1/R halved whenever a full pass fails to
//! improve, for at most `refine_steps` passes. Lattice ties go to the
//! lexicographically smallest point.
SimplexPoint mode_estimate(const KdeModel& model, std::size_t grid_resolution,
                           int refine_steps);

}  // namespace simplex_kde
