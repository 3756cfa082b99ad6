#include "simplex_kde/hdr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "simplex_kde/error.hpp"
#include "simplex_kde/stats.hpp"

namespace simplex_kde {

HdrResult hdr_threshold_from_values(std::span<const double> values, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw Error(ErrorCode::InvalidLevel, "level = " + std::to_string(level) + ", need (0, 1)");
  if (values.size() < kMinHdrPoints)
    throw Error(ErrorCode::InsufficientSamples,
                "need at least " + std::to_string(kMinHdrPoints) + " points");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double total = stats::pairwise_sum(sorted);
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "density values sum to zero");

  const double target = level * total;
  std::size_t k = 0;
  double cumulative = 0.0;
  for (; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    if (cumulative >= target) break;
  }
  if (k == sorted.size()) k = sorted.size() - 1;
  const double threshold = sorted[k];

  // Delta-method standard error of the ratio estimator sum w 1{w >= t} / sum w.
  const double m = static_cast<double>(sorted.size());
  const double mean_w = total / m;
  std::vector<double> above(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) above[i] = sorted[i] >= threshold ? sorted[i] : 0.0;
  const double fraction = stats::pairwise_sum(above) / total;
  std::vector<double> terms(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double e = sorted[i] * ((sorted[i] >= threshold ? 1.0 : 0.0) - fraction);
    terms[i] = e * e;
  }
  const double se = std::sqrt(stats::pairwise_sum(terms) / m / m) / mean_w;
  return {threshold, level, sorted.size(), se};
}

HdrResult hdr_threshold(const KdeModel& model, double level, std::size_t mc_points, Rng& rng) {
  if (mc_points < kMinHdrPoints)
    throw Error(ErrorCode::InsufficientSamples,
                "need at least " + std::to_string(kMinHdrPoints) + " points");
  std::vector<SimplexPoint> points;
  points.reserve(mc_points);
  for (std::size_t m = 0; m < mc_points; ++m) points.push_back(sample_uniform(model.dim(), rng));
  const std::vector<double> values = model.evaluate_batch(points);
  return hdr_threshold_from_values(values, level);
}

bool hdr_membership(const KdeModel& model, double threshold, const SimplexPoint& s) {
  return model.evaluate(s) >= threshold;
}

}  // namespace simplex_kde
