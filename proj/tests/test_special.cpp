#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "simplex_kde/rng.hpp"
#include "simplex_kde/special.hpp"
#include "simplex_kde/stats.hpp"

using namespace simplex_kde;

// Reference values computed with mpmath at 30 digits.
TEST(Special, LogGammaTable) {
  const std::pair<double, double> table[] = {
      {1.0, 0.0},
      {0.5, 0.57236494292470008707},
      {1.5, -0.12078223763524522235},
      {10.0, 12.801827480081469611},
      {100.0, 359.13420536957539878},
      {1234.5, 7550.5509010778948957},
      {100000.0, 1051287.7089736568949},
  };
  for (auto [x, expected] : table) {
    const double got = special::log_gamma(x);
    if (expected == 0.0)
      EXPECT_NEAR(got, 0.0, 1e-15);
    else
      EXPECT_LE(std::abs(got - expected) / std::abs(expected), 1e-13) << "x=" << x;
  }
}

TEST(Special, NormalQuantileTable) {
  const std::pair<double, double> table[] = {
      {0.5, 0.0},
      {0.9, 1.281551565544600467},
      {0.95, 1.6448536269514727149},
      {0.975, 1.9599639845400542355},
      {0.995, 2.575829303548900761},
  };
  for (auto [p, z] : table) {
    EXPECT_NEAR(special::normal_quantile(p), z, 1e-9) << "p=" << p;
    EXPECT_NEAR(special::normal_quantile(1.0 - p), -z, 1e-9);
  }
}

TEST(Special, GammaQuantileOfNormalInvertsCdf) {
  for (double shape : {0.3, 1.0, 2.0, 51.0, 1000.0}) {
    for (double z : {-7.5, -2.0, -0.1, 0.0, 0.7, 3.0, 7.5}) {
      const double x = special::gamma_quantile_of_normal(shape, z);
      ASSERT_GT(x, 0.0);
      if (z < 0) {
        const double p = special::normal_cdf(z);
        EXPECT_NEAR(boost::math::gamma_p(shape, x) / p, 1.0, 1e-10) << shape << " " << z;
      } else {
        const double q = special::normal_sf(z);
        EXPECT_NEAR(boost::math::gamma_q(shape, x) / q, 1.0, 1e-10) << shape << " " << z;
      }
    }
  }
  EXPECT_NEAR(special::gamma_quantile_of_normal(1.0, 1.0), -std::log(special::normal_sf(1.0)),
              1e-14);
}

TEST(Stats, KsStatisticSmallSamples) {
  const auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  EXPECT_DOUBLE_EQ(stats::ks_statistic({0.25}, uniform), 0.75);
  EXPECT_DOUBLE_EQ(stats::ks_statistic({0.1, 0.15, 0.2, 0.8}, uniform), 0.55);
}

TEST(Stats, KsPvalueMatchesKolmogorovLimit) {
  // P(K > 1.3581) = 0.05 and P(K > 1.6276) = 0.01 for the Kolmogorov limit.
  const std::size_t n = 100000000;
  const double rn = std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(stats::ks_pvalue(1.3581 / rn, n), 0.05, 5e-4);
  EXPECT_NEAR(stats::ks_pvalue(1.6276 / rn, n), 0.01, 1e-4);
  EXPECT_NEAR(stats::ks_pvalue(0.5 / rn, n), 0.9639, 1e-3);
  EXPECT_EQ(stats::ks_pvalue(0.0, 10), 1.0);
}

TEST(Stats, UniformDrawsPassKs) {
  Rng rng(5);
  std::vector<double> u(20000);
  for (double& x : u) x = rng.uniform();
  const double d = stats::ks_statistic(u, [](double x) { return x; });
  EXPECT_GE(stats::ks_pvalue(d, u.size()), 0.01);
}

TEST(Stats, PairwiseSumAndMoments) {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i + 1);
  EXPECT_EQ(stats::pairwise_sum(v), 500500.0);
  EXPECT_DOUBLE_EQ(stats::mean(v), 500.5);
  EXPECT_NEAR(stats::variance(v), 1000.0 * 1001.0 / 12.0, 1e-9);
  std::vector<double> y(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) y[i] = 3.0 - 2.0 * v[i];
  EXPECT_NEAR(stats::ols_slope(v, y), -2.0, 1e-12);
  EXPECT_NEAR(stats::pearson_correlation(v, y), -1.0, 1e-12);
}

TEST(Rng, ProtocolIsStable) {
  Rng a(123), b(123);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng c(9);
  for (int i = 0; i < 10000; ++i) {
    const double u = c.uniform_open();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(c.index(7), 7u);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}
