#include "vlasol/limiter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace vlasol {

namespace {

constexpr double kWenoEpsilon = 1e-6;

double weno5_face(double fm2, double fm1, double f0, double fp1, double fp2) {
  const std::array<double, 3> q{
      (2.0 * fm2 - 7.0 * fm1 + 11.0 * f0) / 6.0,
      (-fm1 + 5.0 * f0 + 2.0 * fp1) / 6.0,
      (2.0 * f0 + 5.0 * fp1 - fp2) / 6.0,
  };
  // Weights only depend on ratios, so large data is scaled down (with epsilon
  // scaled alike) to keep the squared indicators finite. Scale 1 is exact.
  const double scale = std::max({1.0, std::abs(fm2), std::abs(fm1), std::abs(f0), std::abs(fp1),
                                 std::abs(fp2)});
  const double eps = kWenoEpsilon / (scale * scale);
  const double a = fm2 / scale, b = fm1 / scale, c = f0 / scale, d = fp1 / scale, e = fp2 / scale;
  const double d0 = a - 2.0 * b + c;
  const double d1 = b - 2.0 * c + d;
  const double d2 = c - 2.0 * d + e;
  const double e0 = a - 4.0 * b + 3.0 * c;
  const double e1 = b - d;
  const double e2 = 3.0 * c - 4.0 * d + e;
  const std::array<double, 3> beta{
      13.0 / 12.0 * d0 * d0 + 0.25 * e0 * e0,
      13.0 / 12.0 * d1 * d1 + 0.25 * e1 * e1,
      13.0 / 12.0 * d2 * d2 + 0.25 * e2 * e2,
  };
  constexpr std::array<double, 3> gamma{0.1, 0.6, 0.3};
  std::array<double, 3> t{};
  for (int j = 0; j < 3; ++j) t[j] = eps + beta[j];
  const double t_min = std::min({t[0], t[1], t[2]});
  std::array<double, 3> alpha{};
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (t_min * t_min >= std::numeric_limits<double>::min()) {
      alpha[j] = gamma[j] / (t[j] * t[j]);
    } else {
      // 1 / t^2 would overflow; normalise by the smallest t instead.
      const double r = t[j] == t_min ? 1.0 : t_min / t[j];
      alpha[j] = gamma[j] * r * r;
    }
    sum += alpha[j];
  }
  return (alpha[0] * q[0] + alpha[1] * q[1] + alpha[2] * q[2]) / sum;
}

bool cell_troubled(double fc, double fl, double fr, double h_left, double h_right, double m,
                   double dx) {
  const double dp = fr - fc;
  const double dm = fc - fl;
  const double ft = h_right - fc;
  const double ftt = fc - h_left;
  return tvb_minmod({ft, dp, dm}, m, dx) != ft || tvb_minmod({ftt, dp, dm}, m, dx) != ftt;
}

}  // namespace

double minmod(std::span<const double> a) {
  if (a.empty()) throw InvalidArgument("minmod: needs at least one argument");
  const bool positive = a[0] > 0.0;
  const bool negative = a[0] < 0.0;
  if (!positive && !negative) return 0.0;
  double smallest = std::abs(a[0]);
  for (double x : a.subspan(1)) {
    if ((positive && !(x > 0.0)) || (negative && !(x < 0.0))) return 0.0;
    smallest = std::min(smallest, std::abs(x));
  }
  return positive ? smallest : -smallest;
}

double minmod(std::initializer_list<double> a) {
  return minmod(std::span<const double>(a.begin(), a.size()));
}

double tvb_minmod(std::span<const double> a, double m, double dx) {
  if (!(dx > 0.0)) throw InvalidArgument("tvb_minmod: dx must be positive");
  if (a.empty()) throw InvalidArgument("tvb_minmod: needs at least one argument");
  if (std::abs(a[0]) <= m * dx * dx) return a[0];
  return minmod(a);
}

double tvb_minmod(std::initializer_list<double> a, double m, double dx) {
  return tvb_minmod(std::span<const double>(a.begin(), a.size()), m, dx);
}

std::vector<double> weno5_reconstruct_h(std::span<const double> f, Boundary bc) {
  const int n = static_cast<int>(f.size());
  if (n < Grid1D::kMinCells) throw InvalidArgument("weno5_reconstruct_h: needs at least 6 cells");
  auto at = [&](int c) {
    const int idx = detail::wrap_index(c, n, bc);
    return idx < 0 ? 0.0 : f[idx];
  };
  const int nf = bc == Boundary::Periodic ? n : n + 1;
  std::vector<double> h(nf);
  for (int k = 0; k < nf; ++k) {
    const int c = k - 1;  // face k is the right face of cell k - 1
    h[k] = weno5_face(at(c - 2), at(c - 1), at(c), at(c + 1), at(c + 2));
  }
  return h;
}

int limit_inplace(std::span<const double> f, std::span<double> h, const Grid1D& grid, double m,
                  std::span<std::uint8_t> mask) {
  const int n = grid.size();
  const int nf = grid.face_count();
  const Boundary bc = grid.bc();
  auto cell = [&](int c) {
    const int idx = detail::wrap_index(c, n, bc);
    return idx < 0 ? 0.0 : f[idx];
  };
  auto face = [&](int k) { return h[detail::wrap_index(k, nf, bc)]; };

  int flagged = 0;
  for (int c = 0; c < n; ++c) {
    mask[c] = cell_troubled(f[c], cell(c - 1), cell(c + 1), face(c), face(c + 1), m, grid.dx());
    flagged += mask[c];
  }
  if (flagged == 0) return 0;

  const std::vector<double> weno = weno5_reconstruct_h(f, bc);
  for (int c = 0; c < n; ++c) {
    if (!mask[c]) continue;
    const int left = detail::wrap_index(c, nf, bc);
    const int right = detail::wrap_index(c + 1, nf, bc);
    h[left] = weno[left];
    h[right] = weno[right];
  }
  return flagged;
}

TroubleMask detect_troubled(const Line& line, double m) {
  line.validate();
  const int n = line.grid.size();
  TroubleMask mask(n, 0);
  for (int c = 0; c < n; ++c) {
    mask[c] = cell_troubled(line.f[c], line.cell(c - 1), line.cell(c + 1), line.face(c),
                            line.face(c + 1), m, line.grid.dx());
  }
  return mask;
}

std::pair<Line, TroubleMask> apply_limiter(Line line, double m) {
  line.validate();
  TroubleMask mask(line.grid.size(), 0);
  limit_inplace(line.f, line.h, line.grid, m, mask);
  return {std::move(line), std::move(mask)};
}

}  // namespace vlasol
