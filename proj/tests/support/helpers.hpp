#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "vlasol/grid.hpp"

namespace testing_support {

inline constexpr double kPi = std::numbers::pi;

/// Samples g at the cell centres of a grid.
inline std::vector<double> sample(const vlasol::Grid1D& g, const std::function<double(double)>& fn) {
  std::vector<double> out(g.size());
  for (int i = 0; i < g.size(); ++i) out[i] = fn(g.point(i));
  return out;
}

/// Exact sliding average of sin: (1/dx) int_{x-dx/2}^{x+dx/2} sin = sin(x) sin(dx/2) / (dx/2).
inline double sliding_sin(double x, double dx) { return std::sin(x) * std::sin(dx / 2) / (dx / 2); }

/// h for which the cell average of h over [x - dx/2, x + dx/2] equals sin(x).
inline double h_of_sin(double x, double dx) { return std::sin(x) * (dx / 2) / std::sin(dx / 2); }

/// Midpoint-rule integral of the unit Maxwellian over [-a, a] with step dv:
/// the exact truncated mass plus the first two Euler-Maclaurin terms.
inline double maxwellian_midpoint_mass(double dv, double a) {
  const double edge = std::exp(-a * a / 2) / std::sqrt(2 * kPi);
  const double d1 = 2 * a * edge;                  // M'(-a) - M'(a)
  const double d3 = 2 * (a * a * a - 3 * a) * edge;  // M'''(-a) - M'''(a)
  return std::erf(a / std::sqrt(2.0)) + dv * dv / 24.0 * d1 - 7.0 * std::pow(dv, 4) / 5760.0 * d3;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline double sum(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

}  // namespace testing_support
