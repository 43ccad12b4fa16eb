#pragma once

#include "closeval/vec3.hpp"

namespace closeval {

struct Mat3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
};

inline Vec3 apply(const Mat3& R, const Vec3& v) {
  return {R.m[0][0] * v.x + R.m[0][1] * v.y + R.m[0][2] * v.z,
          R.m[1][0] * v.x + R.m[1][1] * v.y + R.m[1][2] * v.z,
          R.m[2][0] * v.x + R.m[2][1] * v.y + R.m[2][2] * v.z};
}

/// Unit-sphere direction v(theta,phi).
inline Vec3 sphere_direction(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

/// Rotation taking the parameter sphere's north pole to v(theta*,phi*).
struct RotationFrame {
  double theta_star = 0.0;
  double phi_star = 0.0;
  Mat3 matrix;
};

RotationFrame rotation_matrix(double theta_star, double phi_star);

struct SphereAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Pullback of the rotated coordinates: the unique (theta,phi) with
/// v(theta,phi) = R(theta*,phi*) v(s,t). theta in [0,pi], phi in (-pi,pi];
/// phi = 0 by convention when v lands on a pole.
SphereAngles rotated_angles(double s, double t, double theta_star, double phi_star);

}  // namespace closeval
