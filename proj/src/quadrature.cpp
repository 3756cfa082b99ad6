#include "simplex_kde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "simplex_kde/error.hpp"

namespace simplex_kde::quadrature {

namespace {

// Breakpoints inside (lo, hi), sorted, with the endpoints included.
std::vector<double> segments(double lo, double hi, std::initializer_list<double> cuts) {
  std::vector<double> out{lo};
  for (double c : cuts)
    if (c > lo && c < hi) out.push_back(c);
  out.push_back(hi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
double integrate_segments(boost::math::quadrature::tanh_sinh<double>& rule, F&& f,
                          const std::vector<double>& cuts, double tolerance) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    total += rule.integrate(f, cuts[k], cuts[k + 1], tolerance);
  return total;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(std::size_t order, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(order, 0.0);
  weights.assign(order, 0.0);
  const double n = static_cast<double>(order);
  // Returns P_n(x) and sets dp = P_n'(x).
  auto legendre = [&](double x, double& dp) {
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= order; ++k) {
      const double kk = static_cast<double>(k);
      const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    return p1;
  };
  for (std::size_t i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(x, dp);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

// Composite rule on [0, 1].
void composite_unit(std::size_t panels, std::size_t order, std::vector<double>& x,
                    std::vector<double>& w) {
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);
  const double h = 1.0 / static_cast<double>(panels);
  x.clear();
  w.clear();
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) * h;
    for (std::size_t k = 0; k < order; ++k) {
      x.push_back(a + 0.5 * h * (gx[k] + 1.0));
      w.push_back(0.5 * h * gw[k]);
    }
  }
}

}  // namespace

double integrate_adaptive(const Integrand& f, std::size_t d, const std::optional<SimplexPoint>& focus,
                          double tolerance) {
  if (focus && focus->dim() != d) throw Error(ErrorCode::DimensionMismatch, "focus dimension");
  boost::math::quadrature::tanh_sinh<double> rule;
  if (d == 1) {
    const double s = focus ? (*focus)[0] : 0.0;
    auto g = [&](double x) { return f(SimplexPoint({std::clamp(x, 0.0, 1.0)})); };
    return integrate_segments(rule, g, segments(0.0, 1.0, {s}), tolerance);
  }
  if (d == 2) {
    const double s1 = focus ? (*focus)[0] : 0.0;
    const double s2 = focus ? (*focus)[1] : 0.0;
    auto outer = [&](double x) {
      x = std::clamp(x, 0.0, 1.0);
      const double top = 1.0 - x;
      if (!(top > 0.0)) return 0.0;
      auto inner = [&](double y) {
        y = std::clamp(y, 0.0, top);
        return f(SimplexPoint({x, y}));
      };
      return integrate_segments(rule, inner, segments(0.0, top, {s2}), tolerance);
    };
    return integrate_segments(rule, outer, segments(0.0, 1.0, {s1, 1.0 - s2}), tolerance);
  }
  throw Error(ErrorCode::InvalidDimension, "adaptive quadrature supports d = 1, 2 only");
}

Rule composite_gauss_legendre(std::size_t d, std::size_t panels, std::size_t order) {
  if (panels < 1 || order < 1) throw Error(ErrorCode::InvalidArgument, "empty quadrature rule");
  std::vector<double> x, w;
  composite_unit(panels, order, x, w);
  Rule rule;
  if (d == 1) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(SimplexPoint({x[i]}));
      rule.weights.push_back(w[i]);
    }
    return rule;
  }
  if (d == 2) {
    rule.nodes.reserve(x.size() * x.size());
    rule.weights.reserve(x.size() * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double top = 1.0 - x[i];
      for (std::size_t j = 0; j < x.size(); ++j) {
        rule.nodes.push_back(SimplexPoint({x[i], top * x[j]}));
        rule.weights.push_back(w[i] * w[j] * top);
      }
    }
    return rule;
  }
  throw Error(ErrorCode::InvalidDimension, "composite rule supports d = 1, 2 only");
}

Rule triangle_centroid_lattice(std::size_t resolution) {
  if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "resolution must be >= 1");
  const double r = static_cast<double>(resolution);
  const double weight = 1.0 / (2.0 * r * r);
  Rule rule;
  rule.nodes.reserve(resolution * resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    for (std::size_t j = 0; i + j < resolution; ++j) {
      const double a = static_cast<double>(i);
      const double b = static_cast<double>(j);
      rule.nodes.push_back(SimplexPoint({(a + 1.0 / 3.0) / r, (b + 1.0 / 3.0) / r}));
      if (i + j + 2 <= resolution)
        rule.nodes.push_back(SimplexPoint({(a + 2.0 / 3.0) / r, (b + 2.0 / 3.0) / r}));
    }
  }
  rule.weights.assign(rule.nodes.size(), weight);
  return rule;
}

}  // namespace simplex_kde::quadrature
