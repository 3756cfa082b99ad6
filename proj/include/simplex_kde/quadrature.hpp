#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "simplex_kde/simplex.hpp"

namespace simplex_kde::quadrature {

using Integrand = std::function<double(const SimplexPoint&)>;

//! Adaptive integral over S_d for d in {1, 2} (tanh-sinh, nested for d = 2).
//! Integration ranges are split at the coordinates of `focus` so a kernel
//! peak sits on panel endpoints, where tanh-sinh clusters its nodes.
double integrate_adaptive(const Integrand& f, std::size_t d,
                          const std::optional<SimplexPoint>& focus = std::nullopt,
                          double tolerance = 1e-10);

//! Fixed node set with weights summing to Vol(S_d).
struct Rule {
  std::vector<SimplexPoint> nodes;
  std::vector<double> weights;
};

//! Composite Gauss-Legendre: `panels` equal panels of `order` nodes on [0,1]
//! for d = 1; for d = 2 the same rule in x and in t, mapped by y = (1 - x) t
//! (Duffy collapse) with Jacobian 1 - x.
Rule composite_gauss_legendre(std::size_t d, std::size_t panels, std::size_t order);

//! d = 2: centroids of the R^2 congruent triangles of the uniform
//! subdivision of S_2, each weighted 1 / (2 R^2).
Rule triangle_centroid_lattice(std::size_t resolution);

}  // namespace simplex_kde::quadrature
