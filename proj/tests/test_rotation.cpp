#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "closeval/quadrature.hpp"
#include "closeval/rotation.hpp"

using namespace closeval;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_entry(const Mat3& a) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a.m[i][j]));
  return m;
}

Mat3 transpose_times(const Mat3& a) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.m[i][j] += a.m[k][i] * a.m[k][j];
  return out;
}

double determinant(const Mat3& a) {
  return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
         a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
         a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

}  // namespace

TEST_CASE("rotation matrix special values") {
  const Mat3 identity = rotation_matrix(0.0, 0.0).matrix;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(identity.m[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));

  const Mat3 quarter = rotation_matrix(kPi / 2, 0.0).matrix;
  const double expected[3][3] = {{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(quarter.m[i][j] - expected[i][j]) < 1e-15);
}

TEST_CASE("rotation matrix is orthogonal with unit determinant") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u_theta(0.0, kPi);
  std::uniform_real_distribution<double> u_phi(-kPi, kPi);
  for (int k = 0; k < 1000; ++k) {
    const double theta = u_theta(rng), phi = u_phi(rng);
    const RotationFrame frame = rotation_matrix(theta, phi);
    Mat3 gram = transpose_times(frame.matrix);
    for (int i = 0; i < 3; ++i) gram.m[i][i] -= 1.0;
    CHECK(max_abs_entry(gram) < 1e-14);
    CHECK(std::abs(determinant(frame.matrix) - 1.0) < 1e-14);
    // north pole maps to the (theta*,phi*) direction
    CHECK(norm(apply(frame.matrix, Vec3{0, 0, 1}) - sphere_direction(theta, phi)) < 1e-14);
  }
}

TEST_CASE("rotated angles special values") {
  // s = 0 is the rotated north pole
  for (double t : {-kPi, -1.0, 0.0, 2.5}) {
    const SphereAngles a = rotated_angles(0.0, t, 1.1, -2.3);
    CHECK(std::abs(a.theta - 1.1) < 1e-13);
    CHECK(std::abs(a.phi - (-2.3)) < 1e-13);
  }

  const SphereAngles b = rotated_angles(kPi / 2, 0.0, kPi / 2, 0.0);
  CHECK(b.theta == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(b.phi == 0.0);  // pole convention

  // identity rotation passes angles through
  for (double s : {0.3, 1.2, 2.9}) {
    for (double t : {-2.0, 0.0, 1.5}) {
      const SphereAngles c = rotated_angles(s, t, 0.0, 0.0);
      CHECK(std::abs(c.theta - s) < 1e-14);
      CHECK(std::abs(c.phi - t) < 1e-14);
    }
  }
}

TEST_CASE("rotated angles invert the rotation") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u_s(0.0, kPi);
  std::uniform_real_distribution<double> u_t(-kPi, kPi);
  for (int k = 0; k < 1000; ++k) {
    const double s = u_s(rng), t = u_t(rng);
    const double theta_star = u_s(rng), phi_star = u_t(rng);
    const SphereAngles a = rotated_angles(s, t, theta_star, phi_star);
    CHECK(a.theta >= 0.0);
    CHECK(a.theta <= kPi);
    CHECK(a.phi > -kPi);
    CHECK(a.phi <= kPi);
    const Vec3 rotated = apply(rotation_matrix(theta_star, phi_star).matrix,
                               sphere_direction(s, t));
    CHECK(norm(sphere_direction(a.theta, a.phi) - rotated) < 1e-12);
  }
}

TEST_CASE("pullback preserves the spherical measure") {
  const auto g = [](double theta, double phi) {
    return std::exp(std::sin(theta) * std::cos(phi) + 0.5 * std::cos(theta));
  };
  const ProductRule rule = product_rule(32);
  const double plain = integrate_rotated(rule, 0.0, 0.0, g);
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u_theta(0.0, kPi);
  std::uniform_real_distribution<double> u_phi(-kPi, kPi);
  for (int k = 0; k < 10; ++k) {
    const double rotated = integrate_rotated(rule, u_theta(rng), u_phi(rng), g);
    CHECK(std::abs(rotated - plain) < 1e-10);
  }
}
