#include "vlasol/sl1d.hpp"

#include <algorithm>
#include <cmath>

namespace vlasol {

namespace {

constexpr int kGhost = 3;

const ReconMatrices& matrices(Order order, Side side) {
  static const ReconMatrices m3l = build_matrices(Order::Cubic3, Side::Left);
  static const ReconMatrices m3r = build_matrices(Order::Cubic3, Side::Right);
  static const ReconMatrices m5l = build_matrices(Order::Quintic5, Side::Left);
  static const ReconMatrices m5r = build_matrices(Order::Quintic5, Side::Right);
  if (order == Order::Cubic3) return side == Side::Left ? m3l : m3r;
  return side == Side::Left ? m5l : m5r;
}

/// Per-row polynomial weights for a fixed xi0: the constant column, and the
/// xi-dependent remainders of C and D.
struct RowWeights {
  std::array<double, 5> c0{};
  std::array<double, 5> cf{};
  std::array<double, 5> dh{};
};

RowWeights row_weights(const ReconMatrices& m, double xi0) {
  RowWeights w;
  for (int r = 0; r < m.rows; ++r) {
    w.c0[r] = m.C(r, 0);
    double p = 1.0;
    double cf = 0.0;
    double dh = 0.0;
    for (int k = 1; k < m.cols; ++k) {
      p *= xi0;
      cf += m.C(r, k) * p;
      dh += m.D(r, k) * p;
    }
    w.cf[r] = cf;
    w.dh[r] = dh;
  }
  return w;
}

void whole_shift(std::span<double> values, long long whole, Boundary bc,
                 std::vector<double>& scratch) {
  const auto n = static_cast<long long>(values.size());
  if (whole == 0 || n == 0) return;
  scratch.assign(values.begin(), values.end());
  if (bc == Boundary::Periodic) {
    long long s = whole % n;
    if (s < 0) s += n;
    for (long long k = 0; k < n; ++k) values[(k + s) % n] = scratch[k];
    return;
  }
  for (long long k = 0; k < n; ++k) {
    const long long src = k - whole;
    values[k] = (src >= 0 && src < n) ? scratch[src] : 0.0;
  }
}

/// Copies src into dst with kGhost ghost entries each side.
void pad(std::span<const double> src, Boundary bc, std::vector<double>& dst) {
  const int n = static_cast<int>(src.size());
  dst.resize(n + 2 * kGhost);
  for (int k = -kGhost; k < n + kGhost; ++k) {
    const int idx = detail::wrap_index(k, n, bc);
    dst[k + kGhost] = idx < 0 ? 0.0 : src[idx];
  }
}

}  // namespace

ShiftDecomposition decompose_shift(double v, double dt, double dx) {
  const double shift = v * dt / dx;
  const double whole = std::ceil(shift - 0.5);
  const double frac = shift - whole;
  ShiftDecomposition out;
  out.whole = static_cast<long long>(whole);
  if (frac >= 0.0) {
    out.side = Side::Left;
    out.xi0 = frac;
  } else {
    out.side = Side::Right;
    out.xi0 = -frac;
  }
  return out;
}

HwenoBlend hweno_first_column(double far, double mid, double near, double h_far, double h_near,
                              const HwenoParams& params) {
  HwenoBlend out;
  const std::array<double, 3> q{
      -2.0 * far + 2.0 * mid + h_far,
      -far / 6.0 + 5.0 * mid / 6.0 + near / 3.0,
      mid / 4.0 + 5.0 * near / 4.0 - h_near / 2.0,
  };

  const double a1 = -2.25 * far + 0.75 * mid + 1.5 * h_far;
  const double b1 = 7.75 * far - 3.25 * mid - 4.5 * h_far;
  const double a2 = -far + 2.0 * mid - near;
  const double b2 = -0.5 * far + 2.0 * mid - 1.5 * near;
  const double a3 = 0.75 * mid - 2.25 * near + 1.5 * h_near;
  const double b3 = 0.25 * mid + 1.25 * near - 1.5 * h_near;
  out.beta = {13.0 / 3.0 * a1 * a1 + b1 * b1, 13.0 / 12.0 * a2 * a2 + b2 * b2,
              13.0 / 3.0 * a3 * a3 + b3 * b3};

  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    out.omega[j] = params.linear_weights[j] / (params.epsilon + out.beta[j]);
    sum += out.omega[j];
  }
  for (int j = 0; j < 3; ++j) {
    out.omega[j] /= sum;
    out.value += out.omega[j] * q[j];
  }
  return out;
}

FluxPair flux_hat_linear(const Line& line, int k, double xi0, Side side, Order order) {
  const ReconMatrices& m = matrices(order, side);
  FluxPair out{0.0, 0.0};
  for (int r = 0; r < m.rows; ++r) {
    const StencilEntry e = m.stencil[r];
    const double u = e.kind == StencilEntry::Cell ? line.cell(k + e.offset) : line.face(k + e.offset);
    double p = 1.0;
    for (int col = 0; col < m.cols; ++col) {
      out.fhat += u * m.C(r, col) * p;
      out.hnew += u * m.D(r, col) * p;
      p *= xi0;
    }
  }
  return out;
}

void advect_inplace(std::span<double> f, std::span<double> h, const Grid1D& grid, double speed,
                    double dt, const Scheme& scheme, AdvectWorkspace& ws) {
  if (!(dt >= 0.0)) throw InvalidArgument("advect: dt must be non-negative");
  if (!std::isfinite(speed)) throw InvalidArgument("advect: speed must be finite");
  if (scheme.mode == FluxMode::Hweno && scheme.order != Order::Quintic5) {
    throw InvalidArgument("advect: HWENO blending needs the fifth-order stencil");
  }
  const int n = grid.size();
  const int nf = grid.face_count();
  const Boundary bc = grid.bc();

  const ShiftDecomposition shift = decompose_shift(speed, dt, grid.dx());
  whole_shift(f, shift.whole, bc, ws.f);
  whole_shift(h, shift.whole, bc, ws.h);
  if (shift.xi0 == 0.0) return;

  const ReconMatrices& m = matrices(scheme.order, shift.side);
  const RowWeights w = row_weights(m, shift.xi0);
  pad(f, bc, ws.f);
  pad(h, bc, ws.h);
  const double* pf = ws.f.data() + kGhost;
  const double* ph = ws.h.data() + kGhost;

  ws.fhat.resize(nf);
  ws.hnew.resize(nf);
  const bool hweno = scheme.mode == FluxMode::Hweno;
  std::array<double, 5> u{};
  for (int k = 0; k < nf; ++k) {
    for (int r = 0; r < m.rows; ++r) {
      const StencilEntry e = m.stencil[r];
      u[r] = e.kind == StencilEntry::Cell ? pf[k + e.offset] : ph[k + e.offset];
    }
    double fhat = 0.0;
    double hnew = 0.0;
    if (hweno) {
      // Rows of the Right stencil are the mirror image of the Left rows.
      const HwenoBlend b = shift.side == Side::Left
                               ? hweno_first_column(u[0], u[1], u[2], u[3], u[4], scheme.hweno)
                               : hweno_first_column(u[2], u[1], u[0], u[4], u[3], scheme.hweno);
      fhat = b.value;
      hnew = b.value;
      for (int r = 0; r < m.rows; ++r) {
        fhat += u[r] * w.cf[r];
        hnew += u[r] * w.dh[r];
      }
    } else {
      for (int r = 0; r < m.rows; ++r) {
        fhat += u[r] * (w.c0[r] + w.cf[r]);
        hnew += u[r] * (w.c0[r] + w.dh[r]);
      }
    }
    ws.fhat[k] = fhat;
    ws.hnew[k] = hnew;
  }

  if (bc == Boundary::Zero) {
    // Closed ends: nothing crosses the outer faces, so the sum of f telescopes.
    ws.fhat[0] = 0.0;
    ws.fhat[nf - 1] = 0.0;
  }
  const double sign = shift.side == Side::Left ? -shift.xi0 : shift.xi0;
  for (int c = 0; c < n; ++c) {
    const double right = ws.fhat[c + 1 < nf ? c + 1 : 0];
    f[c] += sign * (right - ws.fhat[c]);
  }
  std::copy(ws.hnew.begin(), ws.hnew.end(), h.begin());
}

Line advect_line(Line line, double v, double dt, const Scheme& scheme) {
  line.validate();
  AdvectWorkspace ws;
  advect_inplace(line.f, line.h, line.grid, v, dt, scheme, ws);
  return line;
}

Line advect_line(Line line, double v, double dt, FluxMode mode, Order order) {
  return advect_line(std::move(line), v, dt, Scheme{mode, order, {}});
}

}  // namespace vlasol
