#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "simplex_kde/asymptotics.hpp"
#include "simplex_kde/error.hpp"
#include "simplex_kde/processes.hpp"

using namespace simplex_kde;

namespace {

DensityModel uniform_density(std::size_t d) {
  return DensityModel::dirichlet(DirichletParams(std::vector<double>(d, 1.0), 1.0));
}

// g(s) from f.value alone: central differences with step h.
double finite_difference_g(const DensityModel& f, const SimplexPoint& s, double h) {
  const std::size_t d = s.dim();
  auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
    std::vector<double> c(s.coords().begin(), s.coords().end());
    c[i] += di;
    c[j] += dj;
    return f.value(SimplexPoint(c));
  };
  double out = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double grad = (at(i, h, i, 0) - at(i, -h, i, 0)) / (2 * h);
    out += (1.0 - static_cast<double>(d + 1) * s[i]) * grad;
    for (std::size_t j = 0; j < d; ++j) {
      const double hess =
          i == j ? (at(i, h, i, 0) - 2 * f.value(s) + at(i, -h, i, 0)) / (h * h)
                 : (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) /
                       (4 * h * h);
      out += 0.5 * s[i] * ((i == j ? 1.0 : 0.0) - s[j]) * hess;
    }
  }
  return out;
}

CompositionSeries repeated(const SimplexPoint& x, std::size_t n) {
  CompositionSeries out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(x);
  return out;
}

}  // namespace

TEST(Psi, Examples) {
  EXPECT_NEAR(psi(SimplexPoint({0.5})), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_NEAR(psi(barycenter(2)), std::pow(3.0, 1.5) / (4 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(psi(barycenter(2)), 0.41349667156634403713, 1e-15);
  EXPECT_EQ(psi(SimplexPoint({0.2, 0.5})), psi(SimplexPoint({0.5, 0.2})));
  EXPECT_THROW(psi(SimplexPoint({0.0, 0.5})), Error);
  EXPECT_THROW(psi(SimplexPoint({0.5, 0.5})), Error);
}

TEST(Psi, MinimumAtBarycenter) {
  for (std::size_t d : {1u, 2u}) {
    const double at_center = psi(barycenter(d));
    const int r = 60;
    for (int i = 1; i < r; ++i) {
      if (d == 1) {
        EXPECT_GE(psi(SimplexPoint({double(i) / r})), at_center * (1 - 1e-14));
        continue;
      }
      for (int j = 1; i + j < r; ++j)
        EXPECT_GE(psi(SimplexPoint({double(i) / r, double(j) / r})), at_center * (1 - 1e-14));
    }
  }
}

TEST(BiasFunctional, Examples) {
  EXPECT_EQ(bias_functional_g(uniform_density(2), SimplexPoint({0.2, 0.3})), 0.0);
  const DensityModel beta21 = DensityModel::dirichlet(DirichletParams({2.0}, 1.0));
  EXPECT_NEAR(beta21.value(SimplexPoint({0.3})), 0.6, 1e-14);
  EXPECT_NEAR(bias_functional_g(beta21, SimplexPoint({0.5})), 0.0, 1e-14);
  EXPECT_NEAR(bias_functional_g(beta21, SimplexPoint({0.25})), 1.0, 1e-14);
  EXPECT_THROW(bias_functional_g(beta21, SimplexPoint({1.0})), Error);
}

TEST(BiasFunctional, MatchesFiniteDifferences) {
  const std::vector<DirichletParams> targets{
      DirichletParams({2.0, 2.0}, 2.0), DirichletParams({3.0, 2.0}, 1.0),
      DirichletParams({2.0, 4.0}, 3.0), DirichletParams({3.0}, 2.0),
      DirichletParams({2.0, 2.0, 3.0}, 2.0)};
  Rng rng(5);
  for (const DirichletParams& p : targets) {
    const DensityModel f = DensityModel::dirichlet(p);
    for (int k = 0; k < 10; ++k) {
      std::vector<double> c(p.dim());
      for (double& x : c) x = 0.05 + 0.8 / static_cast<double>(p.dim() + 1) * rng.uniform();
      const SimplexPoint s(c);
      const double exact = bias_functional_g(f, s);
      const double approx = finite_difference_g(f, s, 1e-4);
      EXPECT_LE(std::abs(exact - approx), 1e-5 * std::max(1.0, std::abs(exact)))
          << "d=" << p.dim();
    }
  }
}

TEST(MseExpansion, Examples) {
  const auto m = mse_expansion(uniform_density(2), barycenter(2), 10000, 0.05);
  EXPECT_EQ(m.bias_term, 0.0);
  EXPECT_NEAR(m.variance_term, 1e-4 / 0.05 * psi(barycenter(2)) * 2.0, 1e-18);
  EXPECT_NEAR(m.variance_term, 0.00165398668626537615, 1e-15);
  EXPECT_EQ(m.total, m.bias_term + m.variance_term);

  const DensityModel f = DensityModel::dirichlet(DirichletParams({2.0, 2.0}, 2.0));
  const SimplexPoint s({0.2, 0.3});
  const auto a = mse_expansion(f, s, 1000, 0.1), b = mse_expansion(f, s, 2000, 0.1);
  EXPECT_NEAR(b.variance_term, a.variance_term / 2, 1e-16);
  EXPECT_EQ(a.bias_term, b.bias_term);
  EXPECT_GT(a.bias_term, 0.0);
  EXPECT_THROW(mse_expansion(f, SimplexPoint({0.0, 0.3}), 10, 0.1), Error);
}

TEST(MseExpansion, OptimalRateBalancesOrders) {
  const DensityModel f = DensityModel::dirichlet(DirichletParams({2.0, 2.0}, 2.0));
  const SimplexPoint s({0.2, 0.3});
  const double d = 2.0, c = 0.7;
  double reference = 0.0;
  for (std::size_t n : {100u, 1000u, 10000u, 1000000u}) {
    const double nn = static_cast<double>(n);
    const double b = c * std::pow(nn, -2.0 / (d + 4.0));
    const auto m = mse_expansion(f, s, n, b);
    const double scale = std::pow(nn, 4.0 / (d + 4.0));
    if (reference == 0.0) {
      reference = m.total * scale;
      continue;
    }
    EXPECT_NEAR(m.total * scale / reference, 1.0, 1e-13);
    EXPECT_NEAR(m.bias_term * scale / (m.variance_term * scale),
                mse_expansion(f, s, 100, c * std::pow(100.0, -1.0 / 3.0)).bias_term /
                    mse_expansion(f, s, 100, c * std::pow(100.0, -1.0 / 3.0)).variance_term,
                1e-10);
  }
}

TEST(ConfidenceInterval, Examples) {
  const auto ci = confidence_interval(2.0, barycenter(2), 10000, 0.05, 0.05);
  const double half = (ci.hi - ci.lo) / 2;
  EXPECT_NEAR(half, 0.0797, 5e-5);
  EXPECT_NEAR(ci.lo, 1.920, 5e-4);
  EXPECT_NEAR(ci.hi, 2.080, 5e-4);
  EXPECT_NEAR((ci.lo + ci.hi) / 2, 2.0, 1e-15);
  const auto zero = confidence_interval(0.0, barycenter(2), 10000, 0.05, 0.05);
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_EQ(zero.hi, 0.0);
  const auto full = confidence_interval(2.0, barycenter(2), 10000, 0.05, 1.0);
  EXPECT_EQ(full.lo, 2.0);
  EXPECT_EQ(full.hi, 2.0);
  EXPECT_THROW(confidence_interval(2.0, barycenter(2), 100, 0.05, 0.0), Error);
  EXPECT_THROW(confidence_interval(2.0, barycenter(2), 100, 0.05, 1.5), Error);
  EXPECT_THROW(confidence_interval(-1.0, barycenter(2), 100, 0.05, 0.05), Error);
}

TEST(ConfidenceInterval, NotClippedAtZero) {
  const auto ci = confidence_interval(1e-4, barycenter(2), 10, 0.01, 0.05);
  EXPECT_LT(ci.lo, 0.0);
}

TEST(ConfidenceInterval, WidthScaling) {
  const SimplexPoint s({0.2, 0.3});
  const auto a = confidence_interval(1.3, s, 1000, 0.04, 0.1);
  const auto b = confidence_interval(1.3, s, 4000, 0.04, 0.1);
  EXPECT_NEAR((b.hi - b.lo) / (a.hi - a.lo), 0.5, 1e-14);
  const auto c = confidence_interval(1.3, s, 1000, 0.04 * 16, 0.1);
  EXPECT_NEAR((c.hi - c.lo) / (a.hi - a.lo), 0.25, 1e-14);
}

TEST(BandwidthRegime, Examples) {
  const double b = std::pow(1e4, -1.0 / 3.0);
  const auto r = check_bandwidth_regime(10000, b, 2);
  EXPECT_NEAR(b, 0.0464, 1e-4);
  EXPECT_NEAR(r.n_b_half_d, 464.16, 0.01);
  EXPECT_TRUE(r.variance_vanishes);
  EXPECT_NEAR(r.root_n_b_bias, 4.6416, 1e-4);
  EXPECT_FALSE(r.bias_negligible);
  EXPECT_TRUE(r.bandwidth_small);
  EXPECT_FALSE(r.all());

  EXPECT_FALSE(check_bandwidth_regime(10000, 0.9, 2).bandwidth_small);
  for (std::size_t n : {100u, 10000u, 1000000u}) {
    const auto q = check_bandwidth_regime(n, 1.0 / std::sqrt(static_cast<double>(n)), 2);
    EXPECT_TRUE(q.variance_vanishes) << n;
    EXPECT_NEAR(q.n_b_half_d, std::sqrt(static_cast<double>(n)), 1e-9 * static_cast<double>(n));
  }
  RegimeThresholds loose;
  loose.bias_max = 5.0;
  EXPECT_TRUE(check_bandwidth_regime(10000, b, 2, loose).all());
}

TEST(ModeEstimate, IdenticalObservations) {
  const SimplexPoint center = barycenter(2);
  const KdeModel m = KdeModel::fit(repeated(center, 100), 0.01);
  // Brute-force oracle: lattice argmax at resolution 400.
  const int r = 400;
  double best = -1.0;
  std::vector<double> arg;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; i + j <= r; ++j) {
      const SimplexPoint s({double(i) / r, double(j) / r});
      const double v = m.evaluate(s);
      if (v > best) {
        best = v;
        arg = {s[0], s[1]};
      }
    }
  const SimplexPoint mode = mode_estimate(m, 100, 40);
  EXPECT_LT(std::hypot(mode[0] - center[0], mode[1] - center[1]), 0.02);
  EXPECT_LT(std::hypot(mode[0] - arg[0], mode[1] - arg[1]), 0.02);
  EXPECT_GE(m.evaluate(mode), best * (1 - 1e-9));
}

TEST(ModeEstimate, SingleObservationOneDimension) {
  const KdeModel m = KdeModel::fit(repeated(SimplexPoint({0.5}), 1), 0.1);
  double best = -1.0, arg = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double s = i / 100000.0;
    const double v = kappa(KernelSpec(SimplexPoint({s}), 0.1), SimplexPoint({0.5}));
    if (v > best) {
      best = v;
      arg = s;
    }
  }
  const SimplexPoint mode = mode_estimate(m, 50, 40);
  EXPECT_NEAR(mode[0], arg, 1e-4);
}

TEST(ModeEstimate, PermutationInvarianceAndValidity) {
  Rng rng(3);
  const CompositionSeries data = gen_iid(DirichletParams({3.0, 2.0}, 2.0), 200, rng);
  CompositionSeries reversed;
  for (std::size_t i = data.size(); i-- > 0;) reversed.push_back(data[i]);
  const SimplexPoint a = mode_estimate(KdeModel::fit(data, 0.05), 60, 30);
  const SimplexPoint b = mode_estimate(KdeModel::fit(reversed, 0.05), 60, 30);
  EXPECT_NEAR(a[0], b[0], 1e-12);
  EXPECT_NEAR(a[1], b[1], 1e-12);
  // Target mode of Dirichlet(3,2;2) is (2/4, 1/4).
  EXPECT_NEAR(a[0], 0.5, 0.12);
  EXPECT_NEAR(a[1], 0.25, 0.12);

  Rng urng(4);
  CompositionSeries flat;
  for (int i = 0; i < 100; ++i) flat.push_back(sample_uniform(2, urng));
  const SimplexPoint m = mode_estimate(KdeModel::fit(flat, 0.5), 20, 10);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_GE(m.residual(), -1e-12);
}
