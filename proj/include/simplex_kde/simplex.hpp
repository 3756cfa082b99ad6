#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simplex_kde/rng.hpp"

namespace simplex_kde {

//! Slack allowed on the l1 constraint of a simplex point.
inline constexpr double kSimplexTolerance = 1e-12;
//! Slack allowed when a full (d+1)-part composition must sum to one.
inline constexpr double kRowTolerance = 1e-9;

//! A point of S_d = {s in [0,1]^d : |s|_1 <= 1}. The (d+1)-th part of the
//! composition, 1 - |s|_1, is implicit.
class SimplexPoint {
 public:
  //! Validates strictly; throws Error on an empty vector, a negative
  //! coordinate or an l1 norm above 1 + kSimplexTolerance.
  explicit SimplexPoint(std::vector<double> coords);
  SimplexPoint(std::initializer_list<double> coords)
      : SimplexPoint(std::vector<double>(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t k) const { return coords_[k]; }

  double l1() const noexcept { return l1_; }
  //! 1 - |s|_1, clipped at zero.
  double residual() const noexcept;
  //! Every coordinate > 0 and |s|_1 < 1.
  bool is_interior() const noexcept;

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<double> coords_;
  double l1_ = 0.0;
};

//! Barycenter (1/(d+1), ..., 1/(d+1)).
SimplexPoint barycenter(std::size_t d);

enum class ValidationMode { strict, renormalize };

//! Turns raw proportions into a SimplexPoint.
//!
//! With `full_composition`, `raw` holds all d+1 parts and the last one is
//! dropped after the parts are divided by their total. Strict mode then
//! requires the total to be 1 within kRowTolerance; renormalize mode clips
//! negative parts to zero and accepts any positive total. Without
//! `full_composition`, `raw` holds the d free coordinates; renormalize mode
//! clips negatives and rescales when the sum exceeds one.
SimplexPoint validate_composition(std::span<const double> raw, ValidationMode mode,
                                  bool full_composition = false);

//! Uniform draw on S_d: d+1 unit exponentials normalized to sum 1, first d kept.
SimplexPoint sample_uniform(std::size_t d, Rng& rng);

//! Vol(S_d) = 1/d!.
double simplex_volume(std::size_t d);

//! Observations in time order; every point has the same dimension.
class CompositionSeries {
 public:
  CompositionSeries() = default;
  explicit CompositionSeries(std::vector<SimplexPoint> points,
                             std::vector<std::string> labels = {});

  void push_back(SimplexPoint p);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  //! Zero while empty.
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().dim(); }
  const SimplexPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<SimplexPoint>& points() const noexcept { return points_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  std::vector<SimplexPoint> points_;
  std::vector<std::string> labels_;
};

//! Rows of m >= 3 shares (one row per time step), each summing to one.
struct ShareTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

//! The d = 2 series (S_i, S_j) for 0-based columns i != j; the residual
//! 1 - S_i - S_j is the implicit third part.
CompositionSeries build_pair_composition(const ShareTable& table, std::size_t i,
                                         std::size_t j);

}  // namespace simplex_kde
