#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "simplex_kde/simplex.hpp"

namespace simplex_kde {

//! Dirichlet kernel density estimator
//!   fhat(s) = (1/n) sum_i kappa_{s,b}(X_i).
//!
//! Immutable; copies share the observation storage. Evaluation at boundary s
//! is allowed, but the estimator's asymptotics only cover interior points.
//! The estimator ignores the time order of the observations.
class KdeModel {
 public:
  //! Throws EmptyData or NonPositiveBandwidth.
  static KdeModel fit(CompositionSeries data, double bandwidth);

  //! Same observations, different bandwidth; no data copy.
  KdeModel with_bandwidth(double bandwidth) const;

  std::size_t size() const noexcept;
  std::size_t dim() const noexcept;
  double bandwidth() const noexcept { return bandwidth_; }
  const CompositionSeries& data() const noexcept;

  double evaluate(const SimplexPoint& s) const;
  //! Elementwise evaluate(); parallel over points, bitwise identical to the loop.
  std::vector<double> evaluate_batch(std::span<const SimplexPoint> points) const;
  //! Estimator on the n-1 observations other than the 0-based index i.
  double evaluate_loo(const SimplexPoint& s, std::size_t i) const;
  //! kappa_{s,b}(X_i) for the 0-based index i.
  double kernel_at(const SimplexPoint& s, std::size_t i) const;

 private:
  struct Storage;
  KdeModel(std::shared_ptr<const Storage> storage, double bandwidth);
  void check_dim(const SimplexPoint& s) const;

  std::shared_ptr<const Storage> storage_;
  double bandwidth_;
};

}  // namespace simplex_kde
