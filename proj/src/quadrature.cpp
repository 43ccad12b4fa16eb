#include "closeval/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace closeval {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1 || n > 2048) {
    throw std::invalid_argument("gauss_legendre: order must be in [1, 2048], got " +
                                std::to_string(n));
  }
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  // Newton iteration on the Legendre three-term recurrence; roots are
  // symmetric, so only the lower half is computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      // p0 = P_n(z); derivative from the recurrence.
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const std::size_t lo = static_cast<std::size_t>(i);
    const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

ProductRule product_rule(int n) {
  const GaussLegendreRule gl = gauss_legendre(n);
  ProductRule rule;
  rule.n = n;
  rule.polar_nodes.resize(static_cast<std::size_t>(n));
  rule.polar_weights = gl.weights;
  for (int i = 0; i < n; ++i) {
    rule.polar_nodes[static_cast<std::size_t>(i)] =
        kPi * (gl.nodes[static_cast<std::size_t>(i)] + 1.0) / 2.0;
  }
  rule.azimuth_nodes.resize(static_cast<std::size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) {
    rule.azimuth_nodes[static_cast<std::size_t>(j - 1)] = -kPi + kPi * (j - 1) / n;
  }
  return rule;
}

const ProductRule& product_rule_cached(int n) {
  static std::mutex mutex;
  static std::map<int, ProductRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, product_rule(n)).first;
  return it->second;
}

}  // namespace closeval
