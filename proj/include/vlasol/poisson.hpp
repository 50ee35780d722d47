#pragma once

#include <span>
#include <vector>

#include "vlasol/grid.hpp"

namespace vlasol {

/// Electric field at the x grid points, in the zero-mean gauge.
struct FieldE {
  std::vector<double> e;
  double max_abs = 0.0;
};

/// rho_i = sum_j f_ij dv - 1 (neutralising ion background).
std::vector<double> compute_rho(const PhaseState& state);

/// Solves dE/dx = rho on a periodic domain of the given length with a
/// spectral method. The mean of rho is discarded, as is the Nyquist mode.
/// Requires an even number of points.
FieldE solve_field(std::span<const double> rho, double length);

/// Spectral derivative of periodic samples (test and diagnostic helper).
std::vector<double> spectral_derivative(std::span<const double> values, double length);

}  // namespace vlasol
