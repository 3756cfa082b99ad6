#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace simplex_kde::stats {

//! Pairwise (cascade) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);
//! Unbiased sample variance (n - 1 denominator).
double variance(std::span<const double> values);

double pearson_correlation(std::span<const double> x, std::span<const double> y);
//! Least-squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

//! Kolmogorov-Smirnov sup distance between the sample's empirical CDF and cdf.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);
//! Asymptotic p-value P(D_n >= d) using the Kolmogorov limit with Stephens'
//! small-sample correction (sqrt(n) + 0.12 + 0.11/sqrt(n)) d.
double ks_pvalue(double d, std::size_t n);

}  // namespace simplex_kde::stats
