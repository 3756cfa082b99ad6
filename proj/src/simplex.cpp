#include "simplex_kde/simplex.hpp"

#include <cmath>
#include <string>

#include "simplex_kde/error.hpp"

namespace simplex_kde {

SimplexPoint::SimplexPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::EmptyVector, "simplex point needs d >= 1");
  double sum = 0.0;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const double c = coords_[k];
    if (!(c >= 0.0) || !std::isfinite(c))
      throw Error(ErrorCode::NegativeCoordinate,
                  "coordinate " + std::to_string(k) + " = " + std::to_string(c));
    sum += c;
  }
  if (sum > 1.0 + kSimplexTolerance)
    throw Error(ErrorCode::SumExceedsOne, "l1 norm " + std::to_string(sum) + " exceeds 1");
  l1_ = sum;
}

double SimplexPoint::residual() const noexcept { return l1_ >= 1.0 ? 0.0 : 1.0 - l1_; }

bool SimplexPoint::is_interior() const noexcept {
  if (l1_ >= 1.0) return false;
  for (double c : coords_)
    if (c <= 0.0) return false;
  return true;
}

SimplexPoint barycenter(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "d must be >= 1");
  return SimplexPoint(std::vector<double>(d, 1.0 / static_cast<double>(d + 1)));
}

SimplexPoint validate_composition(std::span<const double> raw, ValidationMode mode,
                                  bool full_composition) {
  if (raw.empty()) throw Error(ErrorCode::EmptyVector, "composition is empty");
  if (full_composition && raw.size() < 2)
    throw Error(ErrorCode::InvalidDimension, "full composition needs at least 2 parts");

  std::vector<double> parts(raw.begin(), raw.end());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!std::isfinite(parts[k]))
      throw Error(ErrorCode::NegativeCoordinate, "part " + std::to_string(k) + " is not finite");
    if (parts[k] < 0.0) {
      if (mode == ValidationMode::strict)
        throw Error(ErrorCode::NegativeCoordinate,
                    "part " + std::to_string(k) + " = " + std::to_string(parts[k]));
      parts[k] = 0.0;
    }
  }
  double total = 0.0;
  for (double p : parts) total += p;

  if (full_composition) {
    if (mode == ValidationMode::strict && std::abs(total - 1.0) > kRowTolerance)
      throw Error(ErrorCode::SumExceedsOne,
                  "parts sum to " + std::to_string(total) + ", expected 1");
    if (!(total > 0.0)) throw Error(ErrorCode::SumExceedsOne, "parts sum to zero");
    parts.pop_back();
    for (double& p : parts) p /= total;
    return SimplexPoint(std::move(parts));
  }

  if (total > 1.0 + kSimplexTolerance) {
    if (mode == ValidationMode::strict)
      throw Error(ErrorCode::SumExceedsOne, "l1 norm " + std::to_string(total) + " exceeds 1");
    for (double& p : parts) p /= total;
  }
  return SimplexPoint(std::move(parts));
}

SimplexPoint sample_uniform(std::size_t d, Rng& rng) {
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "d must be >= 1");
  std::vector<double> e(d + 1);
  double total = 0.0;
  for (double& x : e) {
    x = rng.exponential();
    total += x;
  }
  e.pop_back();
  for (double& x : e) x /= total;
  return SimplexPoint(std::move(e));
}

double simplex_volume(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidDimension, "d must be >= 1");
  double factorial = 1.0;
  for (std::size_t k = 2; k <= d; ++k) factorial *= static_cast<double>(k);
  return 1.0 / factorial;
}

CompositionSeries::CompositionSeries(std::vector<SimplexPoint> points,
                                     std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  points_.reserve(points.size());
  for (auto& p : points) push_back(std::move(p));
}

void CompositionSeries::push_back(SimplexPoint p) {
  if (!points_.empty() && p.dim() != points_.front().dim())
    throw Error(ErrorCode::DimensionMismatch,
                "point of dimension " + std::to_string(p.dim()) + " in a series of dimension " +
                    std::to_string(points_.front().dim()));
  points_.push_back(std::move(p));
}

CompositionSeries build_pair_composition(const ShareTable& table, std::size_t i,
                                         std::size_t j) {
  const std::size_t m = table.rows.empty() ? table.columns.size() : table.rows.front().size();
  if (m < 3) throw Error(ErrorCode::InvalidDimension, "need at least 3 share columns");
  if (i >= m || j >= m)
    throw Error(ErrorCode::IndexOutOfRange, "pair index outside " + std::to_string(m) + " columns");
  if (i == j) throw Error(ErrorCode::IndexOutOfRange, "pair indices must differ");

  std::vector<std::string> labels;
  if (table.columns.size() == m) labels = {table.columns[i], table.columns[j]};

  CompositionSeries out({}, std::move(labels));
  for (std::size_t t = 0; t < table.rows.size(); ++t) {
    const auto& row = table.rows[t];
    if (row.size() != m)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(t) + " has wrong length");
    double total = 0.0;
    for (double x : row) total += x;
    if (std::abs(total - 1.0) > kRowTolerance)
      throw Error(ErrorCode::RowNotNormalized,
                  "row " + std::to_string(t) + " sums to " + std::to_string(total));
    out.push_back(SimplexPoint({row[i], row[j]}));
  }
  return out;
}

}  // namespace simplex_kde
