#pragma once

/// Independent exact-rational derivation of the shipped coefficient tables.
/// Nothing here reads vlasol's tables except the comparison helpers at the
/// bottom.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlasol/recon.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

/// Solves A x = b exactly (A square, nonsingular).
inline Vec solve(Mat a, Vec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("oracle: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  Vec x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = b[r] / a[r][r];
  return x;
}

inline Q ipow(const Q& x, int m) {
  Q r = 1;
  for (int k = 0; k < m; ++k) r *= x;
  return r;
}

/// A datum of the interpolation problem, with face k of the flux at x = 0 and
/// unit cell width: a cell average over [o, o + 1] or a point value at o.
struct Datum {
  bool cell;
  int offset;
};

/// Row of the functional applied to the monomial basis 1, x, ..., x^{p-1}.
inline Vec functional_row(const Datum& d, int p) {
  Vec row(p);
  for (int m = 0; m < p; ++m) {
    if (d.cell) {
      // average of x^m over [o, o + 1]
      row[m] = (ipow(Q(d.offset + 1), m + 1) - ipow(Q(d.offset), m + 1)) / (m + 1);
    } else {
      row[m] = ipow(Q(d.offset), m);
    }
  }
  return row;
}

/// Monomial coefficients of the interpolant as a linear map of the data:
/// coef[m][r] = coefficient of x^m contributed by datum r.
inline Mat interpolant(const std::vector<Datum>& data) {
  const int p = static_cast<int>(data.size());
  Mat a(p);
  for (int r = 0; r < p; ++r) a[r] = functional_row(data[r], p);
  Mat coef(p, Vec(p));
  for (int r = 0; r < p; ++r) {
    Vec e(p, Q(0));
    e[r] = 1;
    const Vec x = solve(a, e);
    for (int m = 0; m < p; ++m) coef[m][r] = x[m];
  }
  return coef;
}

struct Derived {
  Mat c;  // rows = data, cols = powers of xi
  Mat d;
};

/// Left: flux is the average of the interpolant over [-xi, 0], new face value
/// is its value at -xi. Right: average over [0, xi], value at xi.
inline Derived derive(const std::vector<Datum>& data, bool left) {
  const int p = static_cast<int>(data.size());
  const Mat coef = interpolant(data);
  Derived out{Mat(p, Vec(p)), Mat(p, Vec(p))};
  for (int r = 0; r < p; ++r) {
    for (int m = 0; m < p; ++m) {
      const Q sign = left && (m % 2 == 1) ? Q(-1) : Q(1);
      out.c[r][m] = sign * coef[m][r] / (m + 1);
      out.d[r][m] = sign * coef[m][r];
    }
  }
  return out;
}

inline std::vector<Datum> stencil_data(vlasol::Order order, vlasol::Side side) {
  using vlasol::Order;
  using vlasol::Side;
  if (order == Order::Cubic3) {
    if (side == Side::Left) return {{true, -1}, {false, 0}, {false, -1}};
    return {{true, 0}, {false, 0}, {false, 1}};
  }
  if (side == Side::Left) return {{true, -2}, {true, -1}, {true, 0}, {false, -2}, {false, 1}};
  return {{true, -1}, {true, 0}, {true, 1}, {false, -1}, {false, 2}};
}

/// Third-order substencils of the Left five-point stencil and the value of
/// their quadratic at the flux face, spread over the five data.
struct Substencils {
  Mat flux;                  // 3 x 5
  std::array<Mat, 3> coef;   // quadratic coefficients per substencil, 3 x 5
};

inline Substencils derive_substencils() {
  const std::vector<Datum> all = stencil_data(vlasol::Order::Quintic5, vlasol::Side::Left);
  const std::array<std::array<int, 3>, 3> pick{{{0, 1, 3}, {0, 1, 2}, {1, 2, 4}}};
  Substencils out{Mat(3, Vec(5, Q(0))), {}};
  for (int j = 0; j < 3; ++j) {
    std::vector<Datum> sub;
    for (int r : pick[j]) sub.push_back(all[r]);
    const Mat coef = interpolant(sub);
    out.coef[j] = Mat(3, Vec(5, Q(0)));
    for (int m = 0; m < 3; ++m) {
      for (int r = 0; r < 3; ++r) out.coef[j][m][pick[j][r]] = coef[m][r];
    }
    for (int r = 0; r < 5; ++r) out.flux[j][r] = out.coef[j][0][r];  // value at x = 0
  }
  return out;
}

/// Linear weights reproducing the fifth-order face value from the three
/// substencils; throws if no exact combination exists.
inline Vec derive_linear_weights(const Mat& flux, const Mat& c5_left) {
  Vec target(5);
  for (int r = 0; r < 5; ++r) target[r] = c5_left[r][0];
  // Solve on rows 0, 2, 4, then verify on all five.
  const std::array<int, 3> rows{0, 2, 4};
  Mat a(3, Vec(3));
  Vec b(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a[i][j] = flux[j][rows[i]];
    b[i] = target[rows[i]];
  }
  const Vec g = solve(a, b);
  for (int r = 0; r < 5; ++r) {
    Q sum = 0;
    for (int j = 0; j < 3; ++j) sum += g[j] * flux[j][r];
    if (sum != target[r]) throw std::runtime_error("oracle: no exact linear weights");
  }
  return g;
}

/// Jiang-Shu indicator of substencil j on the target cell [0, 1] as a 5 x 5
/// quadratic form: beta = u' B u with B = sum_l int_0^1 d_l d_l' dx.
inline Mat derive_beta_form(const Mat& quad_coef) {
  // q(x) = a0 + a1 x + a2 x^2; q' = a1 + 2 a2 x; q'' = 2 a2.
  Mat b(5, Vec(5, Q(0)));
  for (int r = 0; r < 5; ++r) {
    for (int s = 0; s < 5; ++s) {
      const Q a1r = quad_coef[1][r], a2r = quad_coef[2][r];
      const Q a1s = quad_coef[1][s], a2s = quad_coef[2][s];
      // int_0^1 (a1r + 2 a2r x)(a1s + 2 a2s x) dx
      const Q first = a1r * a1s + (a1r * a2s + a2r * a1s) + Q(4, 3) * a2r * a2s;
      const Q second = 4 * a2r * a2s;
      b[r][s] = first + second;
    }
  }
  return b;
}

/// Fourth-order central difference weights on cells -2..2 (exact for
/// polynomials of degree <= 4) and the face stencil whose difference across
/// a cell reproduces them.
struct SourceStencils {
  Vec central;  // 5 weights
  Vec face;     // 4 weights on cells k-2..k+1
};

inline SourceStencils derive_source() {
  Mat a(5, Vec(5));
  Vec b(5, Q(0));
  for (int m = 0; m < 5; ++m) {
    for (int j = 0; j < 5; ++j) a[m][j] = ipow(Q(j - 2), m);
  }
  b[1] = 1;  // d/dx x at 0
  SourceStencils out;
  out.central = solve(a, b);
  // F_{c+1} - F_c on cell c + j: a_{j+1} - a_{j+2} (a_i zero outside 0..3).
  out.face.assign(4, Q(0));
  out.face[0] = -out.central[0];
  for (int i = 1; i < 4; ++i) out.face[i] = out.face[i - 1] - out.central[i];
  return out;
}

/// Difference of the face stencil across a cell, laid out on cells -2..2.
inline Vec difference_of_face(const Vec& face) {
  Vec out(5, Q(0));
  for (int j = -2; j <= 2; ++j) {
    const int plus = j + 1;   // index into F_{c+1}
    const int minus = j + 2;  // index into F_c
    if (plus >= 0 && plus < 4) out[j + 2] += face[plus];
    if (minus >= 0 && minus < 4) out[j + 2] -= face[minus];
  }
  return out;
}

inline Q to_q(const vlasol::Fraction& f) { return Q(f.num, f.den); }

template <std::size_t R, std::size_t C>
bool equal_table(const std::array<std::array<vlasol::Fraction, C>, R>& shipped, const Mat& derived) {
  if (derived.size() != R) return false;
  for (std::size_t r = 0; r < R; ++r) {
    if (derived[r].size() != C) return false;
    for (std::size_t c = 0; c < C; ++c) {
      if (to_q(shipped[r][c]) != derived[r][c]) return false;
    }
  }
  return true;
}

template <std::size_t N>
bool equal_vector(const std::array<vlasol::Fraction, N>& shipped, const Vec& derived) {
  if (derived.size() != N) return false;
  for (std::size_t k = 0; k < N; ++k) {
    if (to_q(shipped[k]) != derived[k]) return false;
  }
  return true;
}

/// Quadratic form of a shipped indicator: sum_t w_t a_t a_t'.
inline Mat shipped_beta_form(const std::array<vlasol::coeff::BetaTerm, 2>& terms) {
  Mat b(5, Vec(5, Q(0)));
  for (const auto& t : terms) {
    for (int r = 0; r < 5; ++r) {
      for (int s = 0; s < 5; ++s) b[r][s] += to_q(t.weight) * to_q(t.a[r]) * to_q(t.a[s]);
    }
  }
  return b;
}

/// One named check of the shipped constants against the derivation.
struct Check {
  std::string name;
  bool ok;
};

inline std::vector<Check> run_all() {
  using namespace vlasol;
  std::vector<Check> out;
  const Derived c3l = derive(stencil_data(Order::Cubic3, Side::Left), true);
  const Derived c3r = derive(stencil_data(Order::Cubic3, Side::Right), false);
  const Derived c5l = derive(stencil_data(Order::Quintic5, Side::Left), true);
  const Derived c5r = derive(stencil_data(Order::Quintic5, Side::Right), false);
  out.push_back({"C3 left", equal_table(coeff::kC3Left, c3l.c)});
  out.push_back({"C3 right", equal_table(coeff::kC3Right, c3r.c)});
  out.push_back({"C5 left", equal_table(coeff::kC5Left, c5l.c)});
  out.push_back({"C5 right", equal_table(coeff::kC5Right, c5r.c)});

  // New face values: D(:, k) = (k + 1) C(:, k) applied to the shipped C.
  auto d_matches = [](const Derived& d, const auto& shipped) {
    for (std::size_t r = 0; r < shipped.size(); ++r) {
      for (std::size_t k = 0; k < shipped[r].size(); ++k) {
        if (d.d[r][k] != Q(static_cast<long long>(k + 1)) * to_q(shipped[r][k])) return false;
      }
    }
    return true;
  };
  out.push_back({"D3 left", d_matches(c3l, coeff::kC3Left)});
  out.push_back({"D3 right", d_matches(c3r, coeff::kC3Right)});
  out.push_back({"D5 left", d_matches(c5l, coeff::kC5Left)});
  out.push_back({"D5 right", d_matches(c5r, coeff::kC5Right)});

  const Substencils sub = derive_substencils();
  out.push_back({"substencil fluxes", equal_table(coeff::kSubstencilFlux, sub.flux)});
  bool weights_ok = false;
  try {
    weights_ok = equal_vector(coeff::kLinearWeights, derive_linear_weights(sub.flux, c5l.c));
  } catch (const std::exception&) {
    weights_ok = false;
  }
  out.push_back({"linear weights", weights_ok});
  for (int j = 0; j < 3; ++j) {
    out.push_back({"beta " + std::to_string(j + 1),
                   derive_beta_form(sub.coef[j]) == shipped_beta_form(coeff::kBeta[j])});
  }

  const SourceStencils src = derive_source();
  out.push_back({"central difference", equal_vector(coeff::kSourceCentralStencil, src.central)});
  out.push_back({"source face stencil", equal_vector(coeff::kSourceFaceStencil, src.face)});
  Vec shipped_face(4);
  for (int i = 0; i < 4; ++i) shipped_face[i] = to_q(coeff::kSourceFaceStencil[i]);
  out.push_back({"face stencil telescopes to central", difference_of_face(shipped_face) == src.central});
  return out;
}

}  // namespace oracle
