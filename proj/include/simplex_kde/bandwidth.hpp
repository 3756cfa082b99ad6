#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "simplex_kde/kde.hpp"
#include "simplex_kde/rng.hpp"
#include "simplex_kde/simplex.hpp"

namespace simplex_kde {

//! 0.01, 0.02, ..., 0.50.
std::vector<double> default_bandwidth_grid();

//! Parses "lo:step:hi" into lo, lo + step, ... <= hi (inclusive up to 1e-9 slack).
std::vector<double> parse_bandwidth_grid(std::string_view spec);

struct LscvConfig {
  std::size_t mc_points = 1000;
  std::vector<double> grid = default_bandwidth_grid();
  std::uint64_t seed = 0;

  //! Throws InvalidGrid / InvalidArgument.
  void validate() const;
};

//! Monte Carlo draws behind one criterion evaluation: M uniform points on S_d
//! and M observation indices (0-based).
struct LscvDraws {
  std::vector<SimplexPoint> uniform_points;
  std::vector<std::size_t> indices;
};

//! Draw protocol: all M uniform points first (sample_uniform), then all M
//! indices (Rng::index(n)), from the same stream.
LscvDraws draw_lscv_points(std::size_t d, std::size_t n, std::size_t mc_points, Rng& rng);

//! LSCV_MC on given draws:
//!   (1/(M d!)) sum_m fhat(U_m)^2 - (2/M) sum_m fhat^{(-I_m)}(X_{I_m}).
//! The two sums may have different lengths (each uses its own count).
double lscv_criterion(const KdeModel& model, const LscvDraws& draws);

//! Draws with `rng` per draw_lscv_points, then evaluates lscv_criterion.
double lscv_mc(const CompositionSeries& data, double bandwidth, const LscvConfig& cfg,
               Rng& rng);

struct LscvPoint {
  double bandwidth;
  double criterion;
};

struct BandwidthSelection {
  double b_star;
  std::vector<LscvPoint> curve;
};

//! Grid argmin of LSCV_MC. One draw set from Rng(cfg.seed) is shared by all
//! grid points (common random numbers), so every curve value equals
//! lscv_mc(data, b, cfg, Rng(cfg.seed)) and adding grid points leaves the
//! others unchanged. Ties go to the smaller bandwidth.
BandwidthSelection select_bandwidth(const CompositionSeries& data, const LscvConfig& cfg);

}  // namespace simplex_kde
