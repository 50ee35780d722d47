#pragma once

#include <array>
#include <span>
#include <vector>

namespace vlasol {

/// Polynomial degree of the Hermite interpolant; the flux is one lower.
enum class Order { Cubic3 = 3, Quintic5 = 5 };

/// Left: foot of the characteristic lies left of x_i (fractional shift in
/// [0, 1/2]). Right: mirror image (fractional shift in [-1/2, 0)).
enum class Side { Left, Right };

/// Exact rational constant. Shipped coefficient tables are stored this way so
/// they can be compared exactly against an independent derivation.
struct Fraction {
  long long num;
  long long den;
  constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Where one stencil row reads its datum, relative to the flux face k
/// (the i-1/2 face of cell i = k).
struct StencilEntry {
  enum Kind { Cell, Face };
  Kind kind;
  int offset;
  bool operator==(const StencilEntry&) const = default;
};

/// Coefficient matrices for one order and side.
///
///   fhat = u . C . (1, xi, ..., xi^{p-1})'
///   hnew = u . D . (1, xi, ..., xi^{p-1})'
/// where u is the stencil vector, p the number of columns, and
/// D(:, k) = (k + 1) C(:, k) with 0-based k.
struct ReconMatrices {
  Order order;
  Side side;
  std::vector<StencilEntry> stencil;
  int rows = 0;
  int cols = 0;
  std::vector<double> c;  // row-major rows x cols
  std::vector<double> d;

  double C(int r, int k) const { return c[r * cols + k]; }
  double D(int r, int k) const { return d[r * cols + k]; }
};

ReconMatrices build_matrices(Order order, Side side);

/// Shipped rational constants. Row order follows the stencil tables below.
namespace coeff {

// Third order, Left: rows (f_{i-1}, h_{i-1/2}, h_{i-3/2}).
inline constexpr std::array<std::array<Fraction, 3>, 3> kC3Left{{
    {{{0, 1}, {3, 1}, {-2, 1}}},
    {{{1, 1}, {-2, 1}, {1, 1}}},
    {{{0, 1}, {-1, 1}, {1, 1}}},
}};
// Third order, Right (mirror about the face): rows (f_i, h_{i-1/2}, h_{i+1/2}).
inline constexpr auto kC3Right = kC3Left;

// Fifth order, Left: rows (f_{i-2}, f_{i-1}, f_i, h_{i-5/2}, h_{i+1/2}).
inline constexpr std::array<std::array<Fraction, 5>, 5> kC5Left{{
    {{{-8, 27}, {-19, 108}, {5, 12}, {19, 108}, {-13, 108}}},
    {{{19, 27}, {89, 108}, {-1, 3}, {-35, 108}, {7, 54}}},
    {{{19, 27}, {-25, 27}, {-1, 12}, {23, 54}, {-13, 108}}},
    {{{1, 9}, {1, 18}, {-1, 6}, {-1, 18}, {1, 18}}},
    {{{-2, 9}, {2, 9}, {1, 6}, {-2, 9}, {1, 18}}},
}};
// Fifth order, Right: rows (f_{i-1}, f_i, f_{i+1}, h_{i-3/2}, h_{i+3/2}).
inline constexpr std::array<std::array<Fraction, 5>, 5> kC5Right{{
    {{{19, 27}, {-25, 27}, {-1, 12}, {23, 54}, {-13, 108}}},
    {{{19, 27}, {89, 108}, {-1, 3}, {-35, 108}, {7, 54}}},
    {{{-8, 27}, {-19, 108}, {5, 12}, {19, 108}, {-13, 108}}},
    {{{-2, 9}, {2, 9}, {1, 6}, {-2, 9}, {1, 18}}},
    {{{1, 9}, {1, 18}, {-1, 6}, {-1, 18}, {1, 18}}},
}};

inline constexpr std::array<StencilEntry, 3> kStencil3Left{{
    {StencilEntry::Cell, -1}, {StencilEntry::Face, 0}, {StencilEntry::Face, -1}}};
inline constexpr std::array<StencilEntry, 3> kStencil3Right{{
    {StencilEntry::Cell, 0}, {StencilEntry::Face, 0}, {StencilEntry::Face, 1}}};
inline constexpr std::array<StencilEntry, 5> kStencil5Left{{
    {StencilEntry::Cell, -2}, {StencilEntry::Cell, -1}, {StencilEntry::Cell, 0},
    {StencilEntry::Face, -2}, {StencilEntry::Face, 1}}};
inline constexpr std::array<StencilEntry, 5> kStencil5Right{{
    {StencilEntry::Cell, -1}, {StencilEntry::Cell, 0}, {StencilEntry::Cell, 1},
    {StencilEntry::Face, -1}, {StencilEntry::Face, 2}}};

// HWENO substencils, written over the Left five-point stencil
// (f_{i-2}, f_{i-1}, f_i, h_{i-5/2}, h_{i+1/2}). Each is the third-order
// value of h at the flux face from three of the five data.
inline constexpr std::array<std::array<Fraction, 5>, 3> kSubstencilFlux{{
    {{{-2, 1}, {2, 1}, {0, 1}, {1, 1}, {0, 1}}},
    {{{-1, 6}, {5, 6}, {1, 3}, {0, 1}, {0, 1}}},
    {{{0, 1}, {1, 4}, {5, 4}, {0, 1}, {-1, 2}}},
}};
inline constexpr std::array<Fraction, 3> kLinearWeights{{{1, 9}, {4, 9}, {4, 9}}};

/// One squared term w * (a . u)^2 of a smoothness indicator.
struct BetaTerm {
  Fraction weight;
  std::array<Fraction, 5> a;
};
// beta_j = sum of two terms, over the same Left stencil ordering.
inline constexpr std::array<std::array<BetaTerm, 2>, 3> kBeta{{
    {{{{13, 3}, {{{-9, 4}, {3, 4}, {0, 1}, {3, 2}, {0, 1}}}},
      {{1, 1}, {{{31, 4}, {-13, 4}, {0, 1}, {-9, 2}, {0, 1}}}}}},
    {{{{13, 12}, {{{-1, 1}, {2, 1}, {-1, 1}, {0, 1}, {0, 1}}}},
      {{1, 1}, {{{-1, 2}, {2, 1}, {-3, 2}, {0, 1}, {0, 1}}}}}},
    {{{{13, 3}, {{{0, 1}, {3, 4}, {-9, 4}, {0, 1}, {3, 2}}}},
      {{1, 1}, {{{0, 1}, {1, 4}, {5, 4}, {0, 1}, {-3, 2}}}}}},
}};

// Cross-derivative source term. For face k the flux reads cells k-2..k+1;
// differencing it across a cell gives the fourth-order central difference
// over cells c-2..c+2.
inline constexpr std::array<Fraction, 4> kSourceFaceStencil{{{-1, 12}, {7, 12}, {7, 12}, {-1, 12}}};
inline constexpr std::array<Fraction, 5> kSourceCentralStencil{
    {{1, 12}, {-8, 12}, {0, 1}, {8, 12}, {-1, 12}}};

}  // namespace coeff
}  // namespace vlasol
