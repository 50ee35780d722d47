#include "vlasol/recon.hpp"

namespace vlasol {

namespace {

template <std::size_t R, std::size_t K, std::size_t S>
ReconMatrices from_table(Order order, Side side,
                         const std::array<std::array<Fraction, K>, R>& table,
                         const std::array<StencilEntry, S>& stencil) {
  static_assert(R == S);
  ReconMatrices m{order, side, {stencil.begin(), stencil.end()}, int(R), int(K), {}, {}};
  m.c.resize(R * K);
  m.d.resize(R * K);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t k = 0; k < K; ++k) {
      m.c[r * K + k] = table[r][k].value();
      m.d[r * K + k] = static_cast<double>(k + 1) * table[r][k].value();
    }
  }
  return m;
}

}  // namespace

ReconMatrices build_matrices(Order order, Side side) {
  if (order == Order::Cubic3) {
    return side == Side::Left ? from_table(order, side, coeff::kC3Left, coeff::kStencil3Left)
                              : from_table(order, side, coeff::kC3Right, coeff::kStencil3Right);
  }
  return side == Side::Left ? from_table(order, side, coeff::kC5Left, coeff::kStencil5Left)
                            : from_table(order, side, coeff::kC5Right, coeff::kStencil5Right);
}

}  // namespace vlasol
