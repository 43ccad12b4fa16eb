#include "closeval/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace closeval {

namespace {

constexpr double kPi = std::numbers::pi;

// Newton iterates are kept this far from the parameterization poles; the
// induced error in the minimal distance is O(kPoleMargin^2).
constexpr double kPoleMargin = 1e-7;

}  // namespace

SurfaceDomain make_domain(Profile profile) {
  SurfaceDomain d;
  d.profile = profile;
  d.axis_scale = (profile == Profile::sphere) ? Vec3{1.0, 1.0, 1.0} : Vec3{1.0, 2.0, 1.0};
  d.ell = 1.0;
  return d;
}

SurfaceDomain domain_from_name(const std::string& name) {
  if (name == "sphere") return make_domain(Profile::sphere);
  if (name == "peanut") return make_domain(Profile::peanut);
  if (name == "mushroom") return make_domain(Profile::mushroom);
  throw std::invalid_argument("unknown domain name: " + name);
}

std::string domain_name(const SurfaceDomain& domain) {
  switch (domain.profile) {
    case Profile::sphere: return "sphere";
    case Profile::peanut: return "peanut";
    case Profile::mushroom: return "mushroom";
  }
  return "unknown";
}

RadialValue radial_profile(const SurfaceDomain& domain, double theta) {
  switch (domain.profile) {
    case Profile::sphere:
      return {1.0, 0.0};
    case Profile::peanut: {
      // r^2 = cos(2t) + sqrt(1.1 - sin^2(2t))
      const double g = 1.1 - std::sin(2.0 * theta) * std::sin(2.0 * theta);
      const double sqrt_g = std::sqrt(g);
      const double r = std::sqrt(std::cos(2.0 * theta) + sqrt_g);
      const double d_r2 = -2.0 * std::sin(2.0 * theta) - std::sin(4.0 * theta) / sqrt_g;
      return {r, d_r2 / (2.0 * r)};
    }
    case Profile::mushroom: {
      const double denom = 1.0 + 100.0 * (1.0 - std::cos(theta));
      return {2.0 - 1.0 / denom, 100.0 * std::sin(theta) / (denom * denom)};
    }
  }
  throw std::logic_error("unreachable profile");
}

Vec3 parameterize(const SurfaceDomain& domain, double theta, double phi) {
  const double r = radial_profile(domain, theta).r;
  const Vec3& a = domain.axis_scale;
  const double st = std::sin(theta);
  return {r * a.x * st * std::cos(phi), r * a.y * st * std::sin(phi),
          r * a.z * std::cos(theta)};
}

void surface_tangents(const SurfaceDomain& domain, double theta, double phi,
                      Vec3& d_theta, Vec3& d_phi) {
  const auto [r, rp] = radial_profile(domain, theta);
  const Vec3& a = domain.axis_scale;
  const double st = std::sin(theta), ct = std::cos(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double radial = rp * st + r * ct;  // d/dtheta of r sin(theta)
  d_theta = {a.x * radial * cp, a.y * radial * sp, a.z * (rp * ct - r * st)};
  d_phi = {-a.x * r * st * sp, a.y * r * st * cp, 0.0};
}

SurfacePoint surface_frame(const SurfaceDomain& domain, double theta, double phi) {
  if (theta <= 0.0 || theta >= kPi) {
    throw std::domain_error("surface_frame: degenerate pole at theta = " + std::to_string(theta));
  }
  SurfacePoint p;
  p.theta = theta;
  p.phi = phi;
  p.position = parameterize(domain, theta, phi);
  Vec3 d_theta, d_phi;
  surface_tangents(domain, theta, phi, d_theta, d_phi);
  const Vec3 c = cross(d_theta, d_phi);
  const double c_norm = norm(c);
  p.jacobian = c_norm / std::sin(theta);
  p.normal = c / c_norm;
  // All three benchmark domains are star-shaped about the origin.
  if (dot(p.normal, p.position) < 0.0) p.normal = -p.normal;
  return p;
}

std::pair<double, double> inverse_parameterize(const SurfaceDomain& domain, const Vec3& p,
                                               double tol) {
  const Vec3& a = domain.axis_scale;
  const Vec3 q{p.x / a.x, p.y / a.y, p.z / a.z};
  const double q_norm = norm(q);
  if (q_norm == 0.0) throw std::domain_error("inverse_parameterize: point is the origin");
  const double theta = std::acos(std::clamp(q.z / q_norm, -1.0, 1.0));
  const double phi = (q.x == 0.0 && q.y == 0.0) ? 0.0 : std::atan2(q.y, q.x);
  const double residual = norm(parameterize(domain, theta, phi) - p);
  if (residual > tol) {
    throw std::domain_error("inverse_parameterize: point is off the surface by " +
                            std::to_string(residual));
  }
  return {theta, phi};
}

Vec3 evaluation_point(const SurfacePoint& ystar, double eps, double ell) {
  return ystar.position - (eps * ell) * ystar.normal;
}

bool contains(const SurfaceDomain& domain, const Vec3& x) {
  const Vec3& a = domain.axis_scale;
  const Vec3 q{x.x / a.x, x.y / a.y, x.z / a.z};
  const double q_norm = norm(q);
  if (q_norm == 0.0) return true;
  const double theta = std::acos(std::clamp(q.z / q_norm, -1.0, 1.0));
  return q_norm < radial_profile(domain, theta).r;
}

namespace {

double squared_distance(const SurfaceDomain& domain, const Vec3& x, double theta, double phi) {
  const Vec3 d = parameterize(domain, theta, phi) - x;
  return dot(d, d);
}

// Gradient of |y(theta,phi) - x|^2 / 2.
void distance_gradient(const SurfaceDomain& domain, const Vec3& x, double theta, double phi,
                       double& g_theta, double& g_phi) {
  Vec3 d_theta, d_phi;
  surface_tangents(domain, theta, phi, d_theta, d_phi);
  const Vec3 d = parameterize(domain, theta, phi) - x;
  g_theta = dot(d, d_theta);
  g_phi = dot(d, d_phi);
}

double clamp_theta(double theta) {
  return std::clamp(theta, kPoleMargin, kPi - kPoleMargin);
}

double wrap_phi(double phi) {
  phi = std::remainder(phi, 2.0 * kPi);
  if (phi <= -kPi) phi += 2.0 * kPi;
  return phi;
}

// Near a parameterization pole the (theta,phi) chart degenerates
// (d y/d phi ~ theta) and Newton cannot correct the azimuth. The surface
// itself is smooth there, so the minimization is finished in the polar
// chart (u,v) = rad * (cos phi, sin phi) with rad the angular distance from
// the pole, where the objective is an ordinary smooth bowl.
struct PolarChart {
  const SurfaceDomain& domain;
  const Vec3& x;
  bool north;  // which pole the chart is centered on

  double theta_of(double rad) const { return north ? rad : kPi - rad; }

  double f(double u, double v) const {
    const double rad = std::hypot(u, v);
    const double phi = (u == 0.0 && v == 0.0) ? 0.0 : std::atan2(v, u);
    const Vec3 d = parameterize(domain, theta_of(rad), phi) - x;
    return 0.5 * dot(d, d);
  }

  void gradient(double u, double v, double& g_u, double& g_v) const {
    const double rad = std::hypot(u, v);
    if (rad == 0.0) {
      // exact pole: tangents along the two chart axes
      const double theta = theta_of(0.0);
      const double sign = north ? 1.0 : -1.0;
      Vec3 d_theta, d_phi;
      surface_tangents(domain, theta, 0.0, d_theta, d_phi);
      const Vec3 d = parameterize(domain, theta, 0.0) - x;
      g_u = sign * dot(d, d_theta);
      surface_tangents(domain, theta, kPi / 2, d_theta, d_phi);
      g_v = sign * dot(d, d_theta);
      return;
    }
    const double phi = std::atan2(v, u);
    const double theta = theta_of(rad);
    const double cp = std::cos(phi), sp = std::sin(phi);
    Vec3 d_theta, d_phi;
    surface_tangents(domain, theta, phi, d_theta, d_phi);
    const double sign = north ? 1.0 : -1.0;
    // d_phi / rad stays finite: |d_phi| ~ r sin(theta) and sin(theta) ~ rad
    const Vec3 t_u = (sign * cp) * d_theta - (sp / rad) * d_phi;
    const Vec3 t_v = (sign * sp) * d_theta + (cp / rad) * d_phi;
    const Vec3 d = parameterize(domain, theta, phi) - x;
    g_u = dot(d, t_u);
    g_v = dot(d, t_v);
  }
};

void polish_near_pole(const SurfaceDomain& domain, const Vec3& x, double& theta, double& phi) {
  const bool north = theta < kPi / 2;
  const PolarChart chart{domain, x, north};
  double u = (north ? theta : kPi - theta) * std::cos(phi);
  double v = (north ? theta : kPi - theta) * std::sin(phi);
  double f = chart.f(u, v);
  constexpr double kStep = 1e-6;
  for (int it = 0; it < 50; ++it) {
    double g_u, g_v;
    chart.gradient(u, v, g_u, g_v);
    const double g_norm = std::hypot(g_u, g_v);
    if (g_norm < 1e-13) break;

    double a_u, a_v, b_u, b_v, c_u, c_v, e_u, e_v;
    chart.gradient(u + kStep, v, a_u, a_v);
    chart.gradient(u - kStep, v, b_u, b_v);
    chart.gradient(u, v + kStep, c_u, c_v);
    chart.gradient(u, v - kStep, e_u, e_v);
    const double h_uu = (a_u - b_u) / (2.0 * kStep);
    const double h_uv = 0.5 * ((a_v - b_v) + (c_u - e_u)) / (2.0 * kStep);
    const double h_vv = (c_v - e_v) / (2.0 * kStep);

    const double det = h_uu * h_vv - h_uv * h_uv;
    double step_u, step_v;
    if (det > 0.0 && h_uu > 0.0) {
      step_u = -(h_vv * g_u - h_uv * g_v) / det;
      step_v = -(h_uu * g_v - h_uv * g_u) / det;
    } else {
      const double scale = std::max({std::abs(h_uu), std::abs(h_vv), 1.0});
      step_u = -g_u / scale;
      step_v = -g_v / scale;
    }

    double damping = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k) {
      const double tu = u + damping * step_u;
      const double tv = v + damping * step_v;
      const double tf = chart.f(tu, tv);
      bool take = tf < f;
      if (!take && k == 0) {
        double tg_u, tg_v;
        chart.gradient(tu, tv, tg_u, tg_v);
        take = std::hypot(tg_u, tg_v) < 0.5 * g_norm;
      }
      if (take) {
        u = tu;
        v = tv;
        f = tf;
        accepted = true;
        break;
      }
      damping *= 0.5;
    }
    if (!accepted) break;
  }
  const double rad = std::max(std::hypot(u, v), kPoleMargin);
  theta = north ? rad : kPi - rad;
  phi = (u == 0.0 && v == 0.0) ? 0.0 : std::atan2(v, u);
}

}  // namespace

ClosestPoint closest_boundary_point(const SurfaceDomain& domain, const Vec3& x) {
  if (!contains(domain, x)) {
    throw std::domain_error("closest_boundary_point: point is not strictly interior");
  }

  // Coarse seed; strict "<" keeps the first minimum in scan order so ties
  // resolve deterministically.
  constexpr int kThetaScan = 64, kPhiScan = 128;
  double best_theta = 0.0, best_phi = 0.0;
  double best_f = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kThetaScan; ++i) {
    const double theta = kPi * (i + 0.5) / kThetaScan;
    for (int j = 0; j < kPhiScan; ++j) {
      const double phi = -kPi + 2.0 * kPi * j / kPhiScan;
      const double f = squared_distance(domain, x, theta, phi);
      if (f < best_f) {
        best_f = f;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Damped Newton on f = |y - x|^2 / 2 with the analytic gradient and a
  // central-difference Hessian. Steps are accepted on an f decrease, or on a
  // gradient decrease once f has hit its floating-point floor (for far
  // targets f stops resolving long before the gradient does). Every accepted
  // step improves on the grid seed, so the final iterate is the answer even
  // without formal convergence.
  constexpr double kGradTol = 1e-13;
  constexpr int kMaxIterations = 50;
  constexpr double kHessStep = 1e-6;
  double theta = best_theta, phi = best_phi;
  double f = 0.5 * best_f;
  for (int it = 0; it < kMaxIterations; ++it) {
    double g_t, g_p;
    distance_gradient(domain, x, theta, phi, g_t, g_p);
    const double g_norm = std::hypot(g_t, g_p);
    if (g_norm < kGradTol) break;

    double gtp_t, gtp_p, gtm_t, gtm_p, gpp_t, gpp_p, gpm_t, gpm_p;
    distance_gradient(domain, x, clamp_theta(theta + kHessStep), phi, gtp_t, gtp_p);
    distance_gradient(domain, x, clamp_theta(theta - kHessStep), phi, gtm_t, gtm_p);
    distance_gradient(domain, x, theta, phi + kHessStep, gpp_t, gpp_p);
    distance_gradient(domain, x, theta, phi - kHessStep, gpm_t, gpm_p);
    const double h_tt = (gtp_t - gtm_t) / (2.0 * kHessStep);
    const double h_tp = 0.5 * ((gtp_p - gtm_p) + (gpp_t - gpm_t)) / (2.0 * kHessStep);
    const double h_pp = (gpp_p - gpm_p) / (2.0 * kHessStep);

    double det = h_tt * h_pp - h_tp * h_tp;
    double step_t, step_p;
    if (det > 0.0 && h_tt > 0.0) {
      step_t = -(h_pp * g_t - h_tp * g_p) / det;
      step_p = -(h_tt * g_p - h_tp * g_t) / det;
    } else {
      // Indefinite Hessian away from the minimum: scaled descent step.
      const double scale = std::max({std::abs(h_tt), std::abs(h_pp), 1.0});
      step_t = -g_t / scale;
      step_p = -g_p / scale;
    }

    double damping = 1.0;
    bool accepted = false;
    for (int k = 0; k < 30; ++k) {
      const double trial_theta = clamp_theta(theta + damping * step_t);
      const double trial_phi = wrap_phi(phi + damping * step_p);
      const double trial_f = 0.5 * squared_distance(domain, x, trial_theta, trial_phi);
      bool take = trial_f < f;
      if (!take && k == 0) {
        double tg_t, tg_p;
        distance_gradient(domain, x, trial_theta, trial_phi, tg_t, tg_p);
        take = std::hypot(tg_t, tg_p) < 0.5 * g_norm;
      }
      if (take) {
        theta = trial_theta;
        phi = trial_phi;
        f = trial_f;
        accepted = true;
        break;
      }
      damping *= 0.5;
    }
    if (!accepted) break;  // pinned at a clamp or at roundoff
  }

  if (theta < 0.05 || theta > kPi - 0.05) polish_near_pole(domain, x, theta, phi);

  ClosestPoint result;
  result.ystar = surface_frame(domain, theta, phi);
  result.eps = norm(x - result.ystar.position) / domain.ell;
  return result;
}

}  // namespace closeval
