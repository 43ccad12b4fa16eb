#include "closeval/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "closeval/harness.hpp"
#include "closeval/reference.hpp"

namespace closeval {

namespace {

std::vector<double> parse_reals(const std::string& text, std::size_t expected,
                                const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    values.push_back(std::stod(field, &used));
    if (used != field.size()) throw std::invalid_argument(what + ": bad number '" + field + "'");
  }
  if (values.size() != expected) {
    throw std::invalid_argument(what + ": expected " + std::to_string(expected) +
                                " comma-separated values, got '" + text + "'");
  }
  return values;
}

PlaneSpec parse_plane(const std::string& text) {
  if (text.size() < 3 || text[1] != '=') {
    throw std::invalid_argument("plane must look like z=0.0, got '" + text + "'");
  }
  PlaneSpec plane;
  switch (text[0]) {
    case 'x': plane.axis = 0; break;
    case 'y': plane.axis = 1; break;
    case 'z': plane.axis = 2; break;
    default: throw std::invalid_argument("plane axis must be x, y or z");
  }
  plane.value = std::stod(text.substr(2));
  return plane;
}

std::vector<PointSpec> resolve_points(const SurfaceDomain& domain,
                                      const std::vector<std::string>& cartesian,
                                      const std::vector<std::string>& angles) {
  std::vector<PointSpec> points;
  int index = 0;
  for (const std::string& text : cartesian) {
    const auto v = parse_reals(text, 3, "--point");
    points.push_back(
        point_from_cartesian(domain, Vec3{v[0], v[1], v[2]}, "p" + std::to_string(index++)));
  }
  for (const std::string& text : angles) {
    const auto v = parse_reals(text, 2, "--point-angles");
    points.push_back({"p" + std::to_string(index++), v[0], v[1]});
  }
  if (points.empty()) throw std::invalid_argument("no evaluation points given");
  return points;
}

void emit(const std::vector<ErrorRecord>& records, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << csv_string(records);
  } else {
    write_csv(records, out_path);
  }
}

int run_fit(const std::string& in_path, const std::string& out_path, double floor) {
  const std::vector<ErrorRecord> records = read_csv(in_path);
  using Key = std::tuple<std::string, int, int, std::string>;
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> groups;
  std::vector<Key> order;
  for (const ErrorRecord& r : records) {
    if (std::isnan(r.abs_error)) continue;
    const Key key{r.domain, r.approx, r.n, r.point_id};
    if (groups.find(key) == groups.end()) order.push_back(key);
    groups[key].first.push_back(r.eps);
    groups[key].second.push_back(r.abs_error);
  }
  std::ostringstream out;
  out << "domain,approx,n,point_id,slope\n";
  for (const Key& key : order) {
    const auto& [eps, err] = groups[key];
    std::string slope = "nan";
    try {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6g", fit_slope(eps, err, floor));
      slope = buf;
    } catch (const std::invalid_argument&) {
      // fewer than 3 points above the floor; keep nan
    }
    out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
        << std::get<3>(key) << ',' << slope << '\n';
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path);
    file << out.str();
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Close evaluation of Laplace layer potentials in 3D"};
  app.require_subcommand(1);

  std::string domain_str = "sphere";
  int approx = 2;
  int n = 128;
  std::string n_list;
  double eps_min = 1e-6, eps_max = 1e-1;
  int eps_count = 20;
  std::vector<std::string> cartesian_points, angle_points;
  std::string plane_str = "z=0";
  int resolution = 50;
  std::string out_path, in_path;
  double floor = 1e-13;

  const auto add_common = [&](CLI::App* cmd, bool wants_points) {
    cmd->add_option("--domain", domain_str, "sphere, peanut or mushroom")
        ->check(CLI::IsMember({"sphere", "peanut", "mushroom"}));
    cmd->add_option("--n", n, "quadrature order N")->check(CLI::Range(1, 2048));
    cmd->add_option("--out", out_path, "output CSV path (stdout if omitted)");
    if (wants_points) {
      cmd->add_option("--point", cartesian_points, "Cartesian point x,y,z (repeatable)");
      cmd->add_option("--point-angles", angle_points, "surface angles theta,phi (repeatable)");
    }
  };

  CLI::App* sweep_eps = app.add_subcommand("sweep-eps", "error vs eps at fixed N");
  add_common(sweep_eps, true);
  sweep_eps->add_option("--approx", approx, "approximation 1, 2 or 3")->check(CLI::Range(1, 3));
  sweep_eps->add_option("--eps-min", eps_min);
  sweep_eps->add_option("--eps-max", eps_max);
  sweep_eps->add_option("--eps-count", eps_count)->check(CLI::PositiveNumber);

  CLI::App* sweep_grid = app.add_subcommand("sweep-grid", "error over an N x eps grid");
  add_common(sweep_grid, true);
  sweep_grid->add_option("--approx", approx)->check(CLI::Range(1, 3));
  sweep_grid->add_option("--n-list", n_list, "comma-separated quadrature orders");
  sweep_grid->add_option("--eps-min", eps_min);
  sweep_grid->add_option("--eps-max", eps_max);
  sweep_grid->add_option("--eps-count", eps_count)->check(CLI::PositiveNumber);

  CLI::App* field_slice = app.add_subcommand("field-slice", "error on a planar interior grid");
  add_common(field_slice, false);
  field_slice->add_option("--approx", approx)->check(CLI::Range(1, 3));
  field_slice->add_option("--plane", plane_str, "axis-aligned plane, e.g. z=0.0");
  field_slice->add_option("--resolution", resolution)->check(CLI::Range(2, 4096));

  CLI::App* gauss_law = app.add_subcommand("gauss-law", "double-layer potential of unit density");
  add_common(gauss_law, true);

  CLI::App* fit = app.add_subcommand("fit", "fit log-log slopes from a sweep CSV");
  fit->add_option("--in", in_path, "input CSV")->required();
  fit->add_option("--out", out_path, "output path (stdout if omitted)");
  fit->add_option("--floor", floor, "exclude errors at or below this floor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (fit->parsed()) return run_fit(in_path, out_path, floor);

    const SurfaceDomain domain = domain_from_name(domain_str);

    if (gauss_law->parsed()) {
      // Points here are evaluation points anywhere off the boundary.
      if (cartesian_points.empty() && angle_points.empty()) {
        throw std::invalid_argument("gauss-law needs at least one --point");
      }
      if (!angle_points.empty()) {
        throw std::invalid_argument("gauss-law takes Cartesian --point values only");
      }
      const ProductRule& rule = product_rule_cached(n);
      std::vector<ErrorRecord> records;
      int index = 0;
      for (const std::string& text : cartesian_points) {
        const auto v = parse_reals(text, 3, "--point");
        const Vec3 x{v[0], v[1], v[2]};
        const bool interior = contains(domain, x);
        ErrorRecord rec;
        rec.domain = domain_name(domain);
        rec.approx = 0;
        rec.n = n;
        rec.point_id = "p" + std::to_string(index++);
        if (interior) {
          const ClosestPoint cp = closest_boundary_point(domain, x);
          rec.eps = cp.eps;
          rec.theta_star = cp.ystar.theta;
          rec.phi_star = cp.ystar.phi;
        }
        rec.u_exact = interior ? -1.0 : 0.0;
        rec.u_numeric = gauss_law_check(domain, x, rule);
        rec.abs_error = std::abs(rec.u_exact - rec.u_numeric);
        rec.log10_error = std::log10(std::fmax(rec.abs_error, 1e-17));
        records.push_back(std::move(rec));
      }
      emit(records, out_path);
      return 0;
    }

    if (field_slice->parsed()) {
      const auto records =
          run_field_slice(domain, approx, n, parse_plane(plane_str), resolution);
      emit(records, out_path);
      return 0;
    }

    SweepConfig config;
    config.domain = domain;
    config.approx = approx;
    config.eps_values = log_spaced_descending(eps_min, eps_max, eps_count);
    config.points = resolve_points(domain, cartesian_points, angle_points);
    config.output_path = out_path;
    if (sweep_grid->parsed()) {
      if (!n_list.empty()) {
        config.n_values.clear();
        std::stringstream ss(n_list);
        std::string field;
        while (std::getline(ss, field, ',')) config.n_values.push_back(std::stoi(field));
      } else {
        config.n_values = {n};
      }
      emit(run_grid_sweep(config), out_path);
    } else {
      config.n_values = {n};
      emit(run_epsilon_sweep(config), out_path);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace closeval
