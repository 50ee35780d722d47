#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlasol {

/// Thrown for invalid grids, shapes, or parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Boundary { Periodic, Zero };

/// Uniform cell-centred grid on [lo, hi].
///
/// Cell c (0-based) has centre lo + (c + 1/2) dx. Face k sits at lo + k dx, so
/// cell c is bounded by faces c and c + 1. A periodic grid identifies face n
/// with face 0 and stores n faces; a zero-boundary grid stores all n + 1.
class Grid1D {
 public:
  /// Smallest grid the fifth-order stencils can live on.
  static constexpr int kMinCells = 6;

  Grid1D(int n_cells, double lo, double hi, Boundary bc);

  int size() const { return n_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double length() const { return hi_ - lo_; }
  double dx() const { return dx_; }
  Boundary bc() const { return bc_; }

  double point(int c) const { return lo_ + (c + 0.5) * dx_; }
  double face(int k) const { return lo_ + k * dx_; }
  int face_count() const { return bc_ == Boundary::Periodic ? n_ : n_ + 1; }
  std::vector<double> points() const;

  bool operator==(const Grid1D&) const = default;

 private:
  int n_;
  double lo_;
  double hi_;
  double dx_;
  Boundary bc_;
};

/// Point values f at cell centres plus sliding-average values h at faces.
///
/// The derivative is carried implicitly as g_c = (h_{c+1} - h_c) / dx, which
/// makes sums of g telescope.
struct Line {
  Grid1D grid;
  std::vector<double> f;
  std::vector<double> h;

  /// Cell value with ghost handling: periodic wrap, or 0 outside the domain.
  double cell(int c) const;
  /// Face value with the same ghost handling.
  double face(int k) const;
  /// g_c = (h_{c+1} - h_c) / dx.
  double derivative(int c) const;

  /// Throws unless sizes match the grid and all entries are finite.
  void validate() const;
};

/// Builds a line from point values, reconstructing h with WENO5.
Line init_line_from_pointvalues(std::span<const double> f, const Grid1D& grid);

/// f(x, v) with staggered derivative carriers.
///
/// Layouts:
///   f[i * nv + j]        point value at (x_i, v_j)
///   phi[j * nxf + k]     x-face k of v-row j;   f_x = (phi[k+1] - phi[k]) / dx
///   psi[i * nvf + k]     v-face k of x-column i; f_v = (psi[k+1] - psi[k]) / dv
/// where nxf / nvf are the face counts of the two grids.
struct PhaseState {
  Grid1D x;
  Grid1D v;
  std::vector<double> f;
  std::vector<double> phi;
  std::vector<double> psi;

  int nx() const { return x.size(); }
  int nv() const { return v.size(); }
  double& at(int i, int j) { return f[static_cast<std::size_t>(i) * nv() + j]; }
  double at(int i, int j) const { return f[static_cast<std::size_t>(i) * nv() + j]; }

  /// (f_x)_{ij} from phi, honouring the x-grid staggering.
  double fx(int i, int j) const;
  /// (f_v)_{ij} from psi, honouring the v-grid staggering.
  double fv(int i, int j) const;

  void validate() const;
};

/// Builds a phase-space state from point values (layout f[i * nv + j]);
/// phi and psi come from WENO5 reconstruction along each row / column.
PhaseState make_phase_state(const Grid1D& x, const Grid1D& v, std::vector<double> f);

/// Per-step scalars written to the diagnostics CSV.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
  double e_l2 = 0.0;
  double e_linf = 0.0;
  long long troubled_cells = 0;
};

namespace detail {
/// Index of a cell or face with periodic wrap; -1 when outside a zero-BC range.
inline int wrap_index(int k, int count, Boundary bc) {
  if (bc == Boundary::Periodic) {
    k %= count;
    return k < 0 ? k + count : k;
  }
  return (k < 0 || k >= count) ? -1 : k;
}
}  // namespace detail

}  // namespace vlasol
