#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vlasol/grid.hpp"
#include "vlasol/poisson.hpp"

namespace vlasol {

enum class NormKind { L1, L2, Linf, Mass, Energy, Entropy };

/// Fixed-order pairwise summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> xs);

/// Rectangular-rule phase-space quantities. Energy needs `field`.
/// Entropy uses f log|f| with 0 log 0 = 0.
double phase_norm(const PhaseState& state, NormKind kind, const FieldE* field = nullptr);

/// sqrt(sum E_i^2 dx) and max |E_i|.
std::pair<double, double> field_norms(const FieldE& field, double dx);

/// Builds a record. `energy_field` enters the energy; `reported_field`
/// supplies the E norms.
DiagnosticsRecord make_record(double t, const PhaseState& state, const FieldE& energy_field,
                              const FieldE& reported_field, long long troubled_cells);

struct DeviationSeries {
  std::vector<double> values;
  /// Set when the first entry is zero and absolute deviations were returned.
  bool absolute = false;
};

/// (s_k - s_0) / |s_0|.
DeviationSeries relative_deviation(std::span<const double> series);

enum class RateFit { ExtremaLogLinear };

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interior local maxima of `values` with t_lo <= t <= t_hi.
std::vector<std::size_t> local_maxima(std::span<const double> times, std::span<const double> values,
                                      double t_lo, double t_hi);

/// Least-squares slope of log(peak value) against peak time.
double fit_rate(std::span<const double> times, std::span<const double> values,
                std::pair<double, double> window, RateFit mode = RateFit::ExtremaLogLinear);

}  // namespace vlasol
