#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "simplex_kde/error.hpp"
#include "simplex_kde/quadrature.hpp"

using namespace simplex_kde;

namespace {

double apply(const quadrature::Rule& rule, const quadrature::Integrand& f) {
  double out = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) out += rule.weights[k] * f(rule.nodes[k]);
  return out;
}

// int_{S_2} x^a y^b = a! b! / (a + b + 2)!
double monomial_integral(int a, int b) {
  return std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 3.0);
}

}  // namespace

TEST(Adaptive, Monomials) {
  for (int a = 0; a <= 3; ++a) {
    EXPECT_NEAR(quadrature::integrate_adaptive(
                    [&](const SimplexPoint& s) { return std::pow(s[0], a); }, 1),
                1.0 / (a + 1), 1e-12);
    for (int b = 0; b <= 3; ++b)
      EXPECT_NEAR(quadrature::integrate_adaptive(
                      [&](const SimplexPoint& s) { return std::pow(s[0], a) * std::pow(s[1], b); },
                      2),
                  monomial_integral(a, b), 1e-11);
  }
}

TEST(Adaptive, FocusSplitsAtPeak) {
  // |x - c| has a kink at c; splitting there gives full accuracy.
  const SimplexPoint c({0.37});
  const double v = quadrature::integrate_adaptive(
      [&](const SimplexPoint& s) { return std::abs(s[0] - c[0]); }, 1, c);
  EXPECT_NEAR(v, (0.37 * 0.37 + 0.63 * 0.63) / 2, 1e-13);
}

TEST(Adaptive, RejectsUnsupportedDimension) {
  EXPECT_THROW(quadrature::integrate_adaptive([](const SimplexPoint&) { return 1.0; }, 3), Error);
}

TEST(GaussLegendre, WeightsAndExactness) {
  const auto r1 = quadrature::composite_gauss_legendre(1, 4, 3);
  EXPECT_EQ(r1.nodes.size(), 12u);
  EXPECT_NEAR(std::accumulate(r1.weights.begin(), r1.weights.end(), 0.0), 1.0, 1e-14);
  EXPECT_NEAR(apply(r1, [](const SimplexPoint& s) { return std::pow(s[0], 5); }), 1.0 / 6, 1e-14);

  const auto r2 = quadrature::composite_gauss_legendre(2, 5, 3);
  EXPECT_EQ(r2.nodes.size(), 225u);
  EXPECT_NEAR(std::accumulate(r2.weights.begin(), r2.weights.end(), 0.0), 0.5, 1e-14);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 4; ++b)
      EXPECT_NEAR(
          apply(r2, [&](const SimplexPoint& s) { return std::pow(s[0], a) * std::pow(s[1], b); }),
          monomial_integral(a, b), 1e-14);
  for (const SimplexPoint& p : r2.nodes) EXPECT_GT(p.residual(), 0.0);
  EXPECT_THROW(quadrature::composite_gauss_legendre(3, 2, 2), Error);
  EXPECT_THROW(quadrature::composite_gauss_legendre(2, 0, 2), Error);
}

TEST(CentroidLattice, WeightsAndLinearExactness) {
  const auto r = quadrature::triangle_centroid_lattice(40);
  EXPECT_EQ(r.nodes.size(), 1600u);
  EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 0.5, 1e-14);
  EXPECT_NEAR(apply(r, [](const SimplexPoint& s) { return 3 * s[0] - s[1] + 2; }),
              3 * monomial_integral(1, 0) - monomial_integral(0, 1) + 1.0, 1e-14);
  EXPECT_NEAR(apply(r, [](const SimplexPoint& s) { return s[0] * s[1]; }), monomial_integral(1, 1),
              1e-5);
  for (const SimplexPoint& p : r.nodes) EXPECT_TRUE(p.is_interior());
}
