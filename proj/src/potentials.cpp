#include "closeval/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace closeval {

DensityPair constant_densities(double mu_value, double rho_value) {
  DensityPair d;
  d.mu = [mu_value](double, double) { return mu_value; };
  d.rho = [rho_value](double, double) { return rho_value; };
  return d;
}

Target make_target(const SurfacePoint& ystar, double eps, double ell) {
  Target t;
  t.ystar = ystar;
  t.eps = eps;
  t.ell = ell;
  t.x = evaluation_point(ystar, eps, ell);
  return t;
}

double dlp_kernel(const Vec3& y, const Vec3& n_y, const Vec3& x) {
  const Vec3 d = x - y;
  const double dist = norm(d);
  if (dist < 1e-300) throw std::domain_error("dlp_kernel: coincident points");
  return dot(n_y, d) / (dist * dist * dist);
}

double slp_kernel(const Vec3& y, const Vec3& x) {
  const double dist = norm(x - y);
  if (dist < 1e-300) throw std::domain_error("slp_kernel: coincident points");
  return 1.0 / dist;
}

double evaluate_approx1(const SurfaceDomain& domain, const DensityPair& densities, const Vec3& x,
                        const ProductRule& rule, double theta_star, double phi_star) {
  return integrate_rotated(rule, theta_star, phi_star, [&](double theta, double phi) {
    const SurfacePoint p = surface_frame(domain, theta, phi);
    return (-dlp_kernel(p.position, p.normal, x) * densities.mu(theta, phi) +
            slp_kernel(p.position, x) * densities.rho(theta, phi)) *
           p.jacobian;
  });
}

double evaluate_approx2(const SurfaceDomain& domain, const DensityPair& densities,
                        const Target& target, const ProductRule& rule) {
  const double mu_star = densities.mu(target.ystar.theta, target.ystar.phi);
  const double integral =
      integrate_rotated(rule, target.ystar.theta, target.ystar.phi, [&](double theta, double phi) {
        const SurfacePoint p = surface_frame(domain, theta, phi);
        return (-dlp_kernel(p.position, p.normal, target.x) * (densities.mu(theta, phi) - mu_star) +
                slp_kernel(p.position, target.x) * densities.rho(theta, phi)) *
               p.jacobian;
      });
  return mu_star + integral;
}

double evaluate_approx3(const SurfaceDomain& domain, const DensityPair& densities,
                        const Target& target, const ProductRule& rule) {
  const double mu_star = densities.mu(target.ystar.theta, target.ystar.phi);
  const double rho_star = densities.rho(target.ystar.theta, target.ystar.phi);
  const double eps_ell = target.eps * target.ell;
  const Vec3 ystar_pos = target.ystar.position;
  const Vec3 n_star = target.ystar.normal;
  // Single-layer terms are evaluated at eps = 0; the open polar rule never
  // samples y = y*, so the weak singularities are never hit.
  const double integral =
      integrate_rotated(rule, target.ystar.theta, target.ystar.phi, [&](double theta, double phi) {
        const SurfacePoint p = surface_frame(domain, theta, phi);
        const double rho = densities.rho(theta, phi);
        return (-dlp_kernel(p.position, p.normal, target.x) * (densities.mu(theta, phi) - mu_star) +
                slp_kernel(p.position, ystar_pos) * rho +
                eps_ell * dlp_kernel(p.position, n_star, ystar_pos) * rho) *
               p.jacobian;
      });
  return mu_star - 0.5 * eps_ell * rho_star + integral;
}

double gauss_law_check(const SurfaceDomain& domain, const Vec3& x, const ProductRule& rule) {
  double theta_star = 0.0, phi_star = 0.0;
  if (contains(domain, x)) {
    const ClosestPoint cp = closest_boundary_point(domain, x);
    theta_star = cp.ystar.theta;
    phi_star = cp.ystar.phi;
  }
  return integrate_rotated(rule, theta_star, phi_star, [&](double theta, double phi) {
    const SurfacePoint p = surface_frame(domain, theta, phi);
    return dlp_kernel(p.position, p.normal, x) * p.jacobian;
  });
}

}  // namespace closeval
