#include "closeval/reference.hpp"

#include <cmath>

namespace closeval {

double exact_solution(const Vec3& x) {
  return std::exp(x.z) * (std::sin(x.x) + std::sin(x.y));
}

Vec3 exact_gradient(const Vec3& x) {
  const double ez = std::exp(x.z);
  return {ez * std::cos(x.x), ez * std::cos(x.y), ez * (std::sin(x.x) + std::sin(x.y))};
}

DensityPair densities_from_exact(const SurfaceDomain& domain) {
  DensityPair d;
  d.mu = [domain](double theta, double phi) {
    return exact_solution(parameterize(domain, theta, phi));
  };
  d.rho = [domain](double theta, double phi) {
    const SurfacePoint p = surface_frame(domain, theta, phi);
    return dot(p.normal, exact_gradient(p.position));
  };
  return d;
}

SphereKernelOracle sphere_kernel_oracles(double s, double eps) {
  const double q = 2.0 * (1.0 - eps) * (1.0 - std::cos(s)) + eps * eps;
  SphereKernelOracle o;
  o.G_sin = std::sin(s) / std::sqrt(q);
  o.K_sin = (2.0 * eps - eps * eps) * std::sin(s) / (q * std::sqrt(q));
  return o;
}

}  // namespace closeval
