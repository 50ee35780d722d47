#pragma once

#include <array>
#include <span>
#include <vector>

#include "vlasol/grid.hpp"
#include "vlasol/recon.hpp"

namespace vlasol {

/// Total shift v dt / dx split into whole cells and a signed fraction:
/// shift = whole + (side == Left ? xi0 : -xi0), with xi0 in [0, 1/2].
struct ShiftDecomposition {
  long long whole = 0;
  double xi0 = 0.0;
  Side side = Side::Left;
};

/// A fraction of exactly one half is assigned to Left.
ShiftDecomposition decompose_shift(double v, double dt, double dx);

struct HwenoParams {
  double epsilon = 1e-6;
  std::array<double, 3> linear_weights{1.0 / 9.0, 4.0 / 9.0, 4.0 / 9.0};
};

struct HwenoBlend {
  double value = 0.0;  // blended constant coefficient of fhat and hnew
  std::array<double, 3> beta{};
  std::array<double, 3> omega{};
};

/// Nonlinear constant coefficient of the fifth-order flux, written for the
/// Left side. Arguments are the stencil in upwind order:
/// far = f_{i-2}, mid = f_{i-1}, near = f_i, h_far = h_{i-5/2},
/// h_near = h_{i+1/2}. The Right side passes its mirror image.
HwenoBlend hweno_first_column(double far, double mid, double near, double h_far, double h_near,
                              const HwenoParams& params = {});

enum class FluxMode { Linear, Hweno };

struct Scheme {
  FluxMode mode = FluxMode::Hweno;
  Order order = Order::Quintic5;
  HwenoParams hweno{};
};

struct FluxPair {
  double fhat;
  double hnew;
};

/// Linear flux and new face value at face k of a line.
FluxPair flux_hat_linear(const Line& line, int k, double xi0, Side side, Order order);

/// Reusable buffers for the in-place kernel; one per worker thread.
struct AdvectWorkspace {
  std::vector<double> f;
  std::vector<double> h;
  std::vector<double> fhat;
  std::vector<double> hnew;
};

/// Advects (f, h) in place by speed * dt with constant speed.
/// f has grid.size() entries, h has grid.face_count().
void advect_inplace(std::span<double> f, std::span<double> h, const Grid1D& grid, double speed,
                    double dt, const Scheme& scheme, AdvectWorkspace& ws);

/// Value-semantics wrapper around advect_inplace.
Line advect_line(Line line, double v, double dt, FluxMode mode, Order order);
Line advect_line(Line line, double v, double dt, const Scheme& scheme);

}  // namespace vlasol
