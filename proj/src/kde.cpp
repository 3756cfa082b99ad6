#include "simplex_kde/kde.hpp"

#include <cmath>
#include <string>

#include "simplex_kde/dirichlet.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/parallel.hpp"

namespace simplex_kde {

struct KdeModel::Storage {
  CompositionSeries data;
  std::size_t stride = 0;    // d + 1
  std::vector<double> logs;  // per observation: log X_i1..log X_id, log(1 - |X_i|_1)

  explicit Storage(CompositionSeries series) : data(std::move(series)), stride(data.dim() + 1) {
    logs.resize(data.size() * stride);
    for (std::size_t i = 0; i < data.size(); ++i) {
      double* row = logs.data() + i * stride;
      detail::log_parts(data[i], row, row[stride - 1]);
    }
  }

  const double* row(std::size_t i) const { return logs.data() + i * stride; }
};

KdeModel::KdeModel(std::shared_ptr<const Storage> storage, double bandwidth)
    : storage_(std::move(storage)), bandwidth_(bandwidth) {}

KdeModel KdeModel::fit(CompositionSeries data, double bandwidth) {
  if (data.empty()) throw Error(ErrorCode::EmptyData, "no observations");
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
    throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(bandwidth));
  return KdeModel(std::make_shared<const Storage>(std::move(data)), bandwidth);
}

KdeModel KdeModel::with_bandwidth(double bandwidth) const {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
    throw Error(ErrorCode::NonPositiveBandwidth, "b = " + std::to_string(bandwidth));
  return KdeModel(storage_, bandwidth);
}

std::size_t KdeModel::size() const noexcept { return storage_->data.size(); }
std::size_t KdeModel::dim() const noexcept { return storage_->data.dim(); }
const CompositionSeries& KdeModel::data() const noexcept { return storage_->data; }

void KdeModel::check_dim(const SimplexPoint& s) const {
  if (s.dim() != dim())
    throw Error(ErrorCode::DimensionMismatch, "point of dimension " + std::to_string(s.dim()) +
                                                  ", model of dimension " + std::to_string(dim()));
}

double KdeModel::evaluate(const SimplexPoint& s) const {
  check_dim(s);
  const detail::KernelTerms terms(s, bandwidth_);
  const std::size_t n = size();
  const std::size_t last = storage_->stride - 1;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = storage_->row(i);
    sum += std::exp(terms.log_kernel(row, row[last]));
  }
  return sum / static_cast<double>(n);
}

std::vector<double> KdeModel::evaluate_batch(std::span<const SimplexPoint> points) const {
  for (const auto& s : points) check_dim(s);
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t m) { out[m] = evaluate(points[m]); }, 16);
  return out;
}

double KdeModel::evaluate_loo(const SimplexPoint& s, std::size_t i) const {
  const std::size_t n = size();
  if (n < 2) throw Error(ErrorCode::SingleObservation, "leave-one-out needs n >= 2");
  if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
  check_dim(s);
  const detail::KernelTerms terms(s, bandwidth_);
  const std::size_t last = storage_->stride - 1;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const double* row = storage_->row(j);
    sum += std::exp(terms.log_kernel(row, row[last]));
  }
  return sum / static_cast<double>(n - 1);
}

double KdeModel::kernel_at(const SimplexPoint& s, std::size_t i) const {
  if (i >= size()) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
  check_dim(s);
  const detail::KernelTerms terms(s, bandwidth_);
  const double* row = storage_->row(i);
  return std::exp(terms.log_kernel(row, row[storage_->stride - 1]));
}

}  // namespace simplex_kde
