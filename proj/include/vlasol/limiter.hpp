#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "vlasol/grid.hpp"

namespace vlasol {

/// TVB constants for the x and v directions.
struct TvbConstants {
  double m_x = 1.0;
  double m_v = 1.0;
  bool operator==(const TvbConstants&) const = default;
};

/// One flag per cell; nonzero marks a troubled cell.
using TroubleMask = std::vector<std::uint8_t>;

double minmod(std::span<const double> a);
double minmod(std::initializer_list<double> a);

/// Returns a[0] when |a[0]| <= m dx^2, otherwise minmod(a).
double tvb_minmod(std::span<const double> a, double m, double dx);
double tvb_minmod(std::initializer_list<double> a, double m, double dx);

TroubleMask detect_troubled(const Line& line, double m);

/// Jiang-Shu WENO5 values of the sliding average h at every face of the grid,
/// treating the point values f as cell averages of h.
std::vector<double> weno5_reconstruct_h(std::span<const double> f, Boundary bc);

/// Replaces h on both faces of each troubled cell by its WENO5 value.
/// f is never modified.
std::pair<Line, TroubleMask> apply_limiter(Line line, double m);

/// In-place variant used by the 2D sweeps. Marks troubled cells in `mask`
/// (sized to the line) and returns how many were flagged.
int limit_inplace(std::span<const double> f, std::span<double> h, const Grid1D& grid, double m,
                  std::span<std::uint8_t> mask);

}  // namespace vlasol
