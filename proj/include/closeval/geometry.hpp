#pragma once

#include <string>
#include <utility>

#include "closeval/vec3.hpp"

namespace closeval {

enum class Profile { sphere, peanut, mushroom };

/// Closed analytic surface y(theta,phi) = r(theta) * (a1 sin(theta)cos(phi),
/// a2 sin(theta)sin(phi), a3 cos(theta)) with radial profile r and axis
/// scales (a1,a2,a3). ell is the characteristic length used to make the
/// boundary distance eps*ell dimensionless.
struct SurfaceDomain {
  Profile profile = Profile::sphere;
  Vec3 axis_scale{1.0, 1.0, 1.0};
  double ell = 1.0;
};

/// Benchmark domain with its standard axis scales: (1,1,1) for the sphere,
/// (1,2,1) for the peanut and mushroom shapes. ell = 1 for all three.
SurfaceDomain make_domain(Profile profile);
SurfaceDomain domain_from_name(const std::string& name);
std::string domain_name(const SurfaceDomain& domain);

/// Boundary sample: parameters, position, outward unit normal, and the
/// Jacobian factor J with surface measure dsigma = J sin(theta) dtheta dphi.
struct SurfacePoint {
  double theta = 0.0;
  double phi = 0.0;
  Vec3 position;
  Vec3 normal;
  double jacobian = 0.0;
};

struct RadialValue {
  double r = 0.0;
  double r_prime = 0.0;
};

/// r(theta) and its analytic derivative. Smooth on [0,pi] for all profiles.
RadialValue radial_profile(const SurfaceDomain& domain, double theta);

Vec3 parameterize(const SurfaceDomain& domain, double theta, double phi);

/// Analytic tangents d y/d theta and d y/d phi.
void surface_tangents(const SurfaceDomain& domain, double theta, double phi,
                      Vec3& d_theta, Vec3& d_phi);

/// Full frame at (theta,phi). Throws std::domain_error for theta in {0,pi}
/// where the parameterization degenerates.
SurfacePoint surface_frame(const SurfaceDomain& domain, double theta, double phi);

/// Recovers (theta,phi) of a Cartesian point on the surface. Throws
/// std::domain_error if the point is farther than `tol` from the surface.
std::pair<double, double> inverse_parameterize(const SurfaceDomain& domain, const Vec3& p,
                                               double tol = 1e-3);

/// Interior evaluation point x = y* - eps*ell*n*.
Vec3 evaluation_point(const SurfacePoint& ystar, double eps, double ell);

/// True if x lies strictly inside the domain.
bool contains(const SurfaceDomain& domain, const Vec3& x);

struct ClosestPoint {
  SurfacePoint ystar;
  double eps = 0.0;  // |x - ystar.position| / ell
};

/// Closest boundary point to a strictly interior x: coarse 64x128 parameter
/// grid scan for a seed, then damped Newton on the squared distance.
/// Throws std::domain_error if x is outside or on the boundary.
ClosestPoint closest_boundary_point(const SurfaceDomain& domain, const Vec3& x);

}  // namespace closeval
