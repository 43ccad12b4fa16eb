#pragma once

#include <string>
#include <vector>

#include "closeval/geometry.hpp"
#include "closeval/potentials.hpp"

namespace closeval {

/// Boundary point resolved to surface parameters.
struct PointSpec {
  std::string id;
  double theta_star = 0.0;
  double phi_star = 0.0;
};

/// Builds a PointSpec from a Cartesian triple; throws std::domain_error if
/// the point fails the on-surface tolerance of inverse_parameterize.
PointSpec point_from_cartesian(const SurfaceDomain& domain, const Vec3& p, std::string id);

/// count log-spaced values from eps_max down to eps_min.
std::vector<double> log_spaced_descending(double eps_min, double eps_max, int count);

struct SweepConfig {
  SurfaceDomain domain;
  int approx = 2;
  std::vector<int> n_values = {128};        // strictly increasing
  std::vector<double> eps_values;           // strictly decreasing
  std::vector<PointSpec> points;
  std::string output_path;
};

/// Throws std::invalid_argument on ordering violations or empty fields.
void validate(const SweepConfig& config);

struct ErrorRecord {
  std::string domain;
  int approx = 0;
  int n = 0;
  double eps = 0.0;
  std::string point_id;
  double theta_star = 0.0;
  double phi_star = 0.0;
  double u_exact = 0.0;
  double u_numeric = 0.0;
  double abs_error = 0.0;
  double log10_error = 0.0;
};

/// One record per (point, eps), points in config order, eps descending.
/// A failing evaluation yields a record with NaN values and an "_error"
/// suffix on the point id instead of aborting the sweep.
std::vector<ErrorRecord> run_epsilon_sweep(const SweepConfig& config);

/// Full (n, eps) cross product per point, n outer and eps inner.
std::vector<ErrorRecord> run_grid_sweep(const SweepConfig& config);

struct PlaneSpec {
  int axis = 2;  // 0,1,2 for the fixed coordinate
  double value = 0.0;
};

/// Uniform resolution x resolution grid over the domain's bounding box in
/// the given plane. Interior points get closest-point projection and an
/// evaluation; exterior/boundary points are emitted with a "_masked" suffix
/// and NaN values. Pass densities to override the exact-solution ones.
std::vector<ErrorRecord> run_field_slice(const SurfaceDomain& domain, int approx, int n,
                                         const PlaneSpec& plane, int resolution,
                                         const DensityPair* densities = nullptr);

/// Least-squares slope of log10(error) vs log10(eps) over points with
/// error > floor. Throws std::invalid_argument with fewer than 3 such points.
double fit_slope(const std::vector<double>& eps_values, const std::vector<double>& errors,
                 double floor);

extern const char* const kCsvHeader;

std::string csv_string(const std::vector<ErrorRecord>& records);
void write_csv(const std::vector<ErrorRecord>& records, const std::string& path);
std::vector<ErrorRecord> read_csv(const std::string& path);

}  // namespace closeval
