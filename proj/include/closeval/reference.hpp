#pragma once

#include "closeval/geometry.hpp"
#include "closeval/potentials.hpp"
#include "closeval/vec3.hpp"

namespace closeval {

/// Harmonic reference field u(x) = e^{x3} (sin x1 + sin x2).
double exact_solution(const Vec3& x);
Vec3 exact_gradient(const Vec3& x);

/// mu = u restricted to the boundary, rho = n . grad u on the boundary.
DensityPair densities_from_exact(const SurfaceDomain& domain);

/// Closed-form unit-sphere integrands for a target on the polar axis at
/// distance eps: K_sin is the Poisson-form double-layer profile times sin s,
/// G_sin the single-layer one.
struct SphereKernelOracle {
  double K_sin = 0.0;
  double G_sin = 0.0;
};

SphereKernelOracle sphere_kernel_oracles(double s, double eps);

}  // namespace closeval
