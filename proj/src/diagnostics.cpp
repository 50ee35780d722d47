#include "vlasol/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vlasol {

double pairwise_sum(std::span<const double> xs) {
  constexpr std::size_t kBlock = 16;
  if (xs.size() <= kBlock) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double phase_norm(const PhaseState& state, NormKind kind, const FieldE* field) {
  const double cell = state.x.dx() * state.v.dx();
  const int nv = state.nv();
  std::vector<double> terms(state.f.size());
  switch (kind) {
    case NormKind::Linf: {
      double m = 0.0;
      for (double x : state.f) m = std::max(m, std::abs(x));
      return m;
    }
    case NormKind::L1:
      std::transform(state.f.begin(), state.f.end(), terms.begin(),
                     [](double x) { return std::abs(x); });
      return pairwise_sum(terms) * cell;
    case NormKind::L2:
      std::transform(state.f.begin(), state.f.end(), terms.begin(), [](double x) { return x * x; });
      return std::sqrt(pairwise_sum(terms) * cell);
    case NormKind::Mass:
      return pairwise_sum(state.f) * cell;
    case NormKind::Entropy:
      std::transform(state.f.begin(), state.f.end(), terms.begin(),
                     [](double x) { return x == 0.0 ? 0.0 : x * std::log(std::abs(x)); });
      return pairwise_sum(terms) * cell;
    case NormKind::Energy: {
      if (field == nullptr) throw InvalidArgument("phase_norm: energy needs the electric field");
      if (static_cast<int>(field->e.size()) != state.nx()) {
        throw InvalidArgument("phase_norm: field size does not match the x grid");
      }
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const double v = state.v.point(static_cast<int>(k % nv));
        terms[k] = state.f[k] * v * v;
      }
      std::vector<double> e2(field->e.size());
      std::transform(field->e.begin(), field->e.end(), e2.begin(), [](double x) { return x * x; });
      return pairwise_sum(terms) * cell + pairwise_sum(e2) * state.x.dx();
    }
  }
  return 0.0;
}

std::pair<double, double> field_norms(const FieldE& field, double dx) {
  std::vector<double> e2(field.e.size());
  double linf = 0.0;
  for (std::size_t i = 0; i < e2.size(); ++i) {
    e2[i] = field.e[i] * field.e[i];
    linf = std::max(linf, std::abs(field.e[i]));
  }
  return {std::sqrt(pairwise_sum(e2) * dx), linf};
}

DiagnosticsRecord make_record(double t, const PhaseState& state, const FieldE& energy_field,
                              const FieldE& reported_field, long long troubled_cells) {
  DiagnosticsRecord r;
  r.t = t;
  r.mass = phase_norm(state, NormKind::Mass);
  r.l1 = phase_norm(state, NormKind::L1);
  r.l2 = phase_norm(state, NormKind::L2);
  r.energy = phase_norm(state, NormKind::Energy, &energy_field);
  r.entropy = phase_norm(state, NormKind::Entropy);
  std::tie(r.e_l2, r.e_linf) = field_norms(reported_field, state.x.dx());
  r.troubled_cells = troubled_cells;
  return r;
}

DeviationSeries relative_deviation(std::span<const double> series) {
  DeviationSeries out;
  if (series.empty()) return out;
  const double base = series[0];
  out.absolute = base == 0.0;
  const double scale = out.absolute ? 1.0 : std::abs(base);
  out.values.reserve(series.size());
  for (double s : series) out.values.push_back((s - base) / scale);
  return out;
}

std::vector<std::size_t> local_maxima(std::span<const double> times, std::span<const double> values,
                                      double t_lo, double t_hi) {
  if (times.size() != values.size()) throw InvalidArgument("local_maxima: size mismatch");
  std::vector<std::size_t> peaks;
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    if (times[k] < t_lo || times[k] > t_hi) continue;
    if (values[k] > values[k - 1] && values[k] >= values[k + 1]) peaks.push_back(k);
  }
  return peaks;
}

double fit_rate(std::span<const double> times, std::span<const double> values,
                std::pair<double, double> window, RateFit) {
  const std::vector<std::size_t> peaks = local_maxima(times, values, window.first, window.second);
  if (peaks.size() < 3) {
    throw FitError("fit_rate: need at least 3 local maxima in [" + std::to_string(window.first) +
                   ", " + std::to_string(window.second) + "], found " +
                   std::to_string(peaks.size()));
  }
  double st = 0.0;
  double sy = 0.0;
  for (std::size_t k : peaks) {
    if (!(values[k] > 0.0)) throw FitError("fit_rate: non-positive peak value");
    st += times[k];
    sy += std::log(values[k]);
  }
  const double np = static_cast<double>(peaks.size());
  const double tm = st / np;
  const double ym = sy / np;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k : peaks) {
    const double dt = times[k] - tm;
    num += dt * (std::log(values[k]) - ym);
    den += dt * dt;
  }
  return num / den;
}

}  // namespace vlasol
