#pragma once

#include <functional>

#include "closeval/geometry.hpp"
#include "closeval/quadrature.hpp"

namespace closeval {

/// Dirichlet density mu and Neumann density rho = du/dn, both as evaluable
/// scalar fields of the surface parameters.
struct DensityPair {
  std::function<double(double theta, double phi)> mu;
  std::function<double(double theta, double phi)> rho;
};

DensityPair constant_densities(double mu_value, double rho_value);

/// Close evaluation target: boundary point y*, dimensionless distance eps,
/// and the derived interior point x = y* - eps*ell*n*.
struct Target {
  SurfacePoint ystar;
  double eps = 0.0;
  double ell = 1.0;
  Vec3 x;
};

Target make_target(const SurfacePoint& ystar, double eps, double ell);

/// Double-layer kernel n(y).(x - y)/|x - y|^3.
double dlp_kernel(const Vec3& y, const Vec3& n_y, const Vec3& x);

/// Single-layer kernel 1/|x - y|.
double slp_kernel(const Vec3& y, const Vec3& x);

/// The representation formula evaluated directly:
///   u(x) = (1/4pi) int [-DLP(y;x) mu + SLP(y;x) rho] J sin(theta),
/// with the quadrature grid rotated about the supplied frame angles.
/// (0,0) is the identity rotation, i.e. the plain (theta,phi) grid.
/// O(1) error as the target approaches the boundary.
double evaluate_approx1(const SurfaceDomain& domain, const DensityPair& densities, const Vec3& x,
                        const ProductRule& rule, double theta_star = 0.0, double phi_star = 0.0);

/// Subtraction form: u(x) = mu(y*) + quadrature of the integrand with
/// mu(y) - mu(y*) in the double-layer term. O(eps) error.
double evaluate_approx2(const SurfaceDomain& domain, const DensityPair& densities,
                        const Target& target, const ProductRule& rule);

/// Subtraction form with the single-layer potential replaced by its
/// expansion about eps = 0:
///   u(x) = mu(y*) - (eps*ell/2) rho(y*) + quadrature of the modified
///   integrand (eps-free SLP term plus eps*ell times the rho-weighted
///   double-layer kernel evaluated at eps = 0). O(eps^2) error near the
///   boundary; the dropped terms make it inaccurate far from it.
double evaluate_approx3(const SurfaceDomain& domain, const DensityPair& densities,
                        const Target& target, const ProductRule& rule);

/// Double-layer potential of unit density: -1 for interior x, 0 for exterior
/// x. Uses the frame of the closest boundary point when x is interior.
double gauss_law_check(const SurfaceDomain& domain, const Vec3& x, const ProductRule& rule);

}  // namespace closeval
