#pragma once

#include <cstddef>
#include <span>

#include "simplex_kde/kde.hpp"
#include "simplex_kde/rng.hpp"

namespace simplex_kde {

inline constexpr std::size_t kMinHdrPoints = 100;

struct HdrResult {
  double threshold;
  double level;
  std::size_t mc_points;
  //! Standard error of the self-normalized mass estimate at the threshold.
  double se;
};

//! Self-normalized crossing on density values at uniform points: sorts the
//! values descending and returns the first one at which the cumulative sum
//! reaches level * total.
HdrResult hdr_threshold_from_values(std::span<const double> values, double level);

//! Draws M uniform points on S_d with `rng` and applies
//! hdr_threshold_from_values to the estimator values there.
HdrResult hdr_threshold(const KdeModel& model, double level, std::size_t mc_points, Rng& rng);

bool hdr_membership(const KdeModel& model, double threshold, const SimplexPoint& s);

}  // namespace simplex_kde
