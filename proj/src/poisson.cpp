#include "vlasol/poisson.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

namespace vlasol {

namespace {

// The FFTW planner is not reentrant; execution on separate arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// Applies `multiplier(m)` to Fourier mode m (0 <= m <= n/2) of real data.
template <class Multiplier>
std::vector<double> spectral_apply(std::span<const double> values, Multiplier multiplier) {
  const int n = static_cast<int>(values.size());
  std::vector<double> real(values.begin(), values.end());
  std::vector<std::complex<double>> modes(n / 2 + 1);
  auto* spec = reinterpret_cast<fftw_complex*>(modes.data());

  fftw_plan forward;
  fftw_plan backward;
  {
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_r2c_1d(n, real.data(), spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(n, spec, real.data(), FFTW_ESTIMATE);
  }
  std::copy(values.begin(), values.end(), real.begin());
  fftw_execute(forward);
  for (int m = 0; m <= n / 2; ++m) modes[m] = multiplier(m) * modes[m] / static_cast<double>(n);
  fftw_execute(backward);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }
  return real;
}

void check_even(std::size_t n, const char* who) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument(std::string(who) + ": need an even number of points, got " +
                          std::to_string(n));
  }
}

}  // namespace

std::vector<double> compute_rho(const PhaseState& state) {
  const int nx = state.nx();
  const int nv = state.nv();
  const double dv = state.v.dx();
  std::vector<double> rho(nx);
  for (int i = 0; i < nx; ++i) {
    double sum = 0.0;
    for (int j = 0; j < nv; ++j) sum += state.at(i, j);
    rho[i] = sum * dv - 1.0;
  }
  return rho;
}

FieldE solve_field(std::span<const double> rho, double length) {
  check_even(rho.size(), "solve_field");
  if (!(length > 0.0)) throw InvalidArgument("solve_field: length must be positive");
  const int n = static_cast<int>(rho.size());
  const double k0 = 2.0 * std::numbers::pi / length;
  FieldE out;
  // E' = rho  =>  E_hat = rho_hat / (i kappa) = -i rho_hat / kappa.
  out.e = spectral_apply(rho, [&](int m) -> std::complex<double> {
    if (m == 0 || 2 * m == n) return 0.0;
    return {0.0, -1.0 / (k0 * m)};
  });
  for (double x : out.e) out.max_abs = std::max(out.max_abs, std::abs(x));
  return out;
}

std::vector<double> spectral_derivative(std::span<const double> values, double length) {
  check_even(values.size(), "spectral_derivative");
  const int n = static_cast<int>(values.size());
  const double k0 = 2.0 * std::numbers::pi / length;
  return spectral_apply(values, [&](int m) -> std::complex<double> {
    if (2 * m == n) return 0.0;
    return {0.0, k0 * m};
  });
}

}  // namespace vlasol
