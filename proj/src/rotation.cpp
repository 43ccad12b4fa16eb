#include "closeval/rotation.hpp"

#include <cmath>
#include <numbers>

namespace closeval {

RotationFrame rotation_matrix(double theta_star, double phi_star) {
  const double ct = std::cos(theta_star), st = std::sin(theta_star);
  const double cp = std::cos(phi_star), sp = std::sin(phi_star);
  RotationFrame frame;
  frame.theta_star = theta_star;
  frame.phi_star = phi_star;
  // Columns are the rotated basis vectors e1, e2, e3 in the lab frame; e3 is
  // the direction of (theta*,phi*).
  frame.matrix = Mat3{{{ct * cp, -sp, st * cp},
                       {ct * sp, cp, st * sp},
                       {-st, 0.0, ct}}};
  return frame;
}

SphereAngles rotated_angles(double s, double t, double theta_star, double phi_star) {
  const double ct = std::cos(theta_star), st = std::sin(theta_star);
  const double cp = std::cos(phi_star), sp = std::sin(phi_star);
  const double cs = std::cos(s), ss = std::sin(s);
  const double a = ss * std::cos(t), b = ss * std::sin(t);

  const double xi = ct * cp * a - sp * b + st * cp * cs;
  const double eta = ct * sp * a + cp * b + st * sp * cs;
  const double zeta = -st * a + ct * cs;

  // Two-argument arctangents to keep theta in [0,pi] and phi in (-pi,pi];
  // the single-argument forms lose the quadrant for zeta < 0 or xi < 0.
  SphereAngles out;
  const double planar = std::hypot(xi, eta);
  out.theta = std::atan2(planar, zeta);
  out.phi = (xi == 0.0 && eta == 0.0) ? 0.0 : std::atan2(eta, xi);
  if (out.phi <= -std::numbers::pi) out.phi = std::numbers::pi;
  return out;
}

}  // namespace closeval
