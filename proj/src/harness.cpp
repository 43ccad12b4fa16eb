#include "closeval/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "closeval/reference.hpp"

namespace closeval {

namespace {

constexpr double kLogFloor = 1e-17;

double evaluate(const SurfaceDomain& domain, const DensityPair& densities, int approx,
                const Target& target, const ProductRule& rule) {
  switch (approx) {
    case 1:
      return evaluate_approx1(domain, densities, target.x, rule, target.ystar.theta,
                              target.ystar.phi);
    case 2:
      return evaluate_approx2(domain, densities, target, rule);
    case 3:
      return evaluate_approx3(domain, densities, target, rule);
    default:
      throw std::invalid_argument("approx must be 1, 2 or 3, got " + std::to_string(approx));
  }
}

ErrorRecord make_record(const std::string& domain, int approx, int n, const Target& target,
                        const std::string& point_id, double u_exact, double u_numeric) {
  ErrorRecord rec;
  rec.domain = domain;
  rec.approx = approx;
  rec.n = n;
  rec.eps = target.eps;
  rec.point_id = point_id;
  rec.theta_star = target.ystar.theta;
  rec.phi_star = target.ystar.phi;
  rec.u_exact = u_exact;
  rec.u_numeric = u_numeric;
  rec.abs_error = std::abs(u_exact - u_numeric);
  rec.log10_error = std::log10(std::fmax(rec.abs_error, kLogFloor));
  return rec;
}

ErrorRecord sentinel_record(const std::string& domain, int approx, int n, double eps,
                            const std::string& point_id, const char* suffix) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ErrorRecord rec;
  rec.domain = domain;
  rec.approx = approx;
  rec.n = n;
  rec.eps = eps;
  rec.point_id = point_id + std::string(suffix);
  rec.u_exact = nan;
  rec.u_numeric = nan;
  rec.abs_error = nan;
  rec.log10_error = std::log10(kLogFloor);
  return rec;
}

void append_point_sweep(std::vector<ErrorRecord>& out, const SweepConfig& config,
                        const DensityPair& densities, const std::string& name,
                        const PointSpec& point, int n) {
  const ProductRule& rule = product_rule_cached(n);
  SurfacePoint ystar;
  try {
    ystar = surface_frame(config.domain, point.theta_star, point.phi_star);
  } catch (const std::exception&) {
    for (double eps : config.eps_values) {
      out.push_back(sentinel_record(name, config.approx, n, eps, point.id, "_error"));
    }
    return;
  }
  for (double eps : config.eps_values) {
    const Target target = make_target(ystar, eps, config.domain.ell);
    try {
      const double u_num = evaluate(config.domain, densities, config.approx, target, rule);
      const double u_ex = exact_solution(target.x);
      out.push_back(make_record(name, config.approx, n, target, point.id, u_ex, u_num));
    } catch (const std::exception&) {
      out.push_back(sentinel_record(name, config.approx, n, eps, point.id, "_error"));
    }
  }
}

}  // namespace

PointSpec point_from_cartesian(const SurfaceDomain& domain, const Vec3& p, std::string id) {
  const auto [theta, phi] = inverse_parameterize(domain, p);
  return {std::move(id), theta, phi};
}

std::vector<double> log_spaced_descending(double eps_min, double eps_max, int count) {
  if (count < 1 || eps_min <= 0.0 || eps_max < eps_min) {
    throw std::invalid_argument("log_spaced_descending: need eps_max >= eps_min > 0, count >= 1");
  }
  std::vector<double> values(static_cast<std::size_t>(count));
  if (count == 1) {
    values[0] = eps_max;
    return values;
  }
  const double lo = std::log10(eps_min), hi = std::log10(eps_max);
  for (int i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] = std::pow(10.0, hi + (lo - hi) * i / (count - 1));
  }
  return values;
}

void validate(const SweepConfig& config) {
  if (config.approx < 1 || config.approx > 3) {
    throw std::invalid_argument("approx must be 1, 2 or 3");
  }
  if (config.points.empty()) throw std::invalid_argument("no evaluation points");
  if (config.eps_values.empty()) throw std::invalid_argument("no eps values");
  if (config.n_values.empty()) throw std::invalid_argument("no quadrature orders");
  for (std::size_t i = 1; i < config.eps_values.size(); ++i) {
    if (config.eps_values[i] >= config.eps_values[i - 1]) {
      throw std::invalid_argument("eps values must be strictly decreasing");
    }
  }
  for (std::size_t i = 1; i < config.n_values.size(); ++i) {
    if (config.n_values[i] <= config.n_values[i - 1]) {
      throw std::invalid_argument("n values must be strictly increasing");
    }
  }
}

std::vector<ErrorRecord> run_epsilon_sweep(const SweepConfig& config) {
  validate(config);
  const std::string name = domain_name(config.domain);
  const DensityPair densities = densities_from_exact(config.domain);
  std::vector<ErrorRecord> records;
  records.reserve(config.points.size() * config.eps_values.size());
  for (const PointSpec& point : config.points) {
    append_point_sweep(records, config, densities, name, point, config.n_values.front());
  }
  return records;
}

std::vector<ErrorRecord> run_grid_sweep(const SweepConfig& config) {
  validate(config);
  const std::string name = domain_name(config.domain);
  const DensityPair densities = densities_from_exact(config.domain);
  std::vector<ErrorRecord> records;
  records.reserve(config.points.size() * config.n_values.size() * config.eps_values.size());
  for (const PointSpec& point : config.points) {
    for (int n : config.n_values) {
      append_point_sweep(records, config, densities, name, point, n);
    }
  }
  return records;
}

namespace {

// Axis-aligned bounding half-widths from a dense profile scan.
Vec3 bounding_half_widths(const SurfaceDomain& domain) {
  double max_planar = 0.0, max_axial = 0.0;
  constexpr int kSamples = 4096;
  for (int i = 0; i <= kSamples; ++i) {
    const double theta = std::numbers::pi * i / kSamples;
    const double r = radial_profile(domain, theta).r;
    max_planar = std::max(max_planar, r * std::sin(theta));
    max_axial = std::max(max_axial, std::abs(r * std::cos(theta)));
  }
  return {domain.axis_scale.x * max_planar, domain.axis_scale.y * max_planar,
          domain.axis_scale.z * max_axial};
}

double component(const Vec3& v, int axis) { return axis == 0 ? v.x : (axis == 1 ? v.y : v.z); }

}  // namespace

std::vector<ErrorRecord> run_field_slice(const SurfaceDomain& domain, int approx, int n,
                                         const PlaneSpec& plane, int resolution,
                                         const DensityPair* densities) {
  if (plane.axis < 0 || plane.axis > 2) throw std::invalid_argument("plane axis must be 0, 1, 2");
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  const std::string name = domain_name(domain);
  const DensityPair exact = densities_from_exact(domain);
  const DensityPair& dens = densities ? *densities : exact;
  const ProductRule& rule = product_rule_cached(n);

  const Vec3 half = bounding_half_widths(domain);
  const int u_axis = (plane.axis + 1) % 3;
  const int v_axis = (plane.axis + 2) % 3;
  const double hu = component(half, u_axis), hv = component(half, v_axis);

  std::vector<ErrorRecord> records;
  records.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double u = -hu + 2.0 * hu * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double v = -hv + 2.0 * hv * j / (resolution - 1);
      double coords[3];
      coords[plane.axis] = plane.value;
      coords[u_axis] = u;
      coords[v_axis] = v;
      const Vec3 x{coords[0], coords[1], coords[2]};
      const std::string id = "g" + std::to_string(i) + "_" + std::to_string(j);
      if (!contains(domain, x)) {
        records.push_back(sentinel_record(name, approx, n, 0.0, id, "_masked"));
        continue;
      }
      try {
        const ClosestPoint cp = closest_boundary_point(domain, x);
        const Target target = make_target(cp.ystar, cp.eps, domain.ell);
        const double u_num = evaluate(domain, dens, approx, target, rule);
        records.push_back(make_record(name, approx, n, target, id, exact_solution(x), u_num));
      } catch (const std::exception&) {
        records.push_back(sentinel_record(name, approx, n, 0.0, id, "_error"));
      }
    }
  }
  return records;
}

double fit_slope(const std::vector<double>& eps_values, const std::vector<double>& errors,
                 double floor) {
  if (eps_values.size() != errors.size()) {
    throw std::invalid_argument("fit_slope: mismatched lengths");
  }
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    if (errors[i] > floor) {
      xs.push_back(std::log10(eps_values[i]));
      ys.push_back(std::log10(errors[i]));
    }
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("fit_slope: fewer than 3 points above the error floor");
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(xs.size());
  mean_y /= static_cast<double>(xs.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  return sxy / sxx;
}

const char* const kCsvHeader =
    "domain,approx,n,eps,point_id,theta_star,phi_star,u_exact,u_numeric,abs_error,log10_error";

namespace {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace

std::string csv_string(const std::vector<ErrorRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ErrorRecord& r : records) {
    out += r.domain;
    out += ',' + std::to_string(r.approx);
    out += ',' + std::to_string(r.n);
    out += ',' + format_real(r.eps);
    out += ',' + r.point_id;
    out += ',' + format_real(r.theta_star);
    out += ',' + format_real(r.phi_star);
    out += ',' + format_real(r.u_exact);
    out += ',' + format_real(r.u_numeric);
    out += ',' + format_real(r.abs_error);
    out += ',' + format_real(r.log10_error);
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<ErrorRecord>& records, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("write_csv: cannot open " + path);
  file << csv_string(records);
  if (!file) throw std::runtime_error("write_csv: write failed for " + path);
}

std::vector<ErrorRecord> read_csv(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(file, line) || line != kCsvHeader) {
    throw std::runtime_error("read_csv: bad header in " + path);
  }
  std::vector<ErrorRecord> records;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 11) throw std::runtime_error("read_csv: malformed row in " + path);
    ErrorRecord r;
    r.domain = fields[0];
    r.approx = std::stoi(fields[1]);
    r.n = std::stoi(fields[2]);
    r.eps = std::stod(fields[3]);
    r.point_id = fields[4];
    r.theta_star = std::stod(fields[5]);
    r.phi_star = std::stod(fields[6]);
    r.u_exact = std::stod(fields[7]);
    r.u_numeric = std::stod(fields[8]);
    r.abs_error = std::stod(fields[9]);
    r.log10_error = std::stod(fields[10]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace closeval
