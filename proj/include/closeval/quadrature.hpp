#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "closeval/rotation.hpp"

namespace closeval {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending in (-1,1)
  std::vector<double> weights;  // positive, sum to 2
};

/// N-point Gauss-Legendre rule on (-1,1), exact for polynomials of degree
/// <= 2N-1. Throws std::invalid_argument unless 1 <= n <= 2048.
GaussLegendreRule gauss_legendre(int n);

/// Product rule on the parameter sphere: N Gauss-Legendre polar nodes mapped
/// by s_i = pi (z_i + 1)/2 onto (0,pi), plus 2N equispaced azimuthal nodes
/// t_j = -pi + pi (j-1)/N. The pi/2 map scale is carried in the pi/(8N)
/// prefactor of the combined rule, so the weights are the plain
/// Gauss-Legendre ones.
struct ProductRule {
  int n = 0;
  std::vector<double> polar_nodes;
  std::vector<double> polar_weights;
  std::vector<double> azimuth_nodes;
};

ProductRule product_rule(int n);

/// Cached rule, safe for concurrent lookup and insertion.
const ProductRule& product_rule_cached(int n);

/// Quadrature of (1/4pi) * integral of f(theta,phi) sin(theta) dtheta dphi,
/// sampled on the grid rotated so that (theta*,phi*) sits at the north pole:
///
///   (pi/8N) sum_i sum_j w_i sin(s_i) f(theta(s_i,t_j), phi(s_i,t_j)).
///
/// The open polar rule never evaluates f at s = 0, i.e. never exactly at the
/// rotation center.
template <class F>
double integrate_rotated(const ProductRule& rule, double theta_star, double phi_star, F&& f) {
  double sum = 0.0;
  for (int i = 0; i < rule.n; ++i) {
    const double s = rule.polar_nodes[static_cast<std::size_t>(i)];
    double inner = 0.0;
    for (int j = 0; j < 2 * rule.n; ++j) {
      const auto [theta, phi] =
          rotated_angles(s, rule.azimuth_nodes[static_cast<std::size_t>(j)], theta_star, phi_star);
      inner += f(theta, phi);
    }
    sum += rule.polar_weights[static_cast<std::size_t>(i)] * std::sin(s) * inner;
  }
  return std::numbers::pi / (8.0 * rule.n) * sum;
}

}  // namespace closeval
