#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlasol/grid.hpp"
#include "vlasol/limiter.hpp"
#include "vlasol/poisson.hpp"
#include "vlasol/sl1d.hpp"

namespace vlasol {

/// WO runs without the troubled-cell limiter, WL with it.
enum class Variant { WO, WL };

struct SchemeVariant {
  Variant kind = Variant::WO;
  TvbConstants tvb{};
  double cfl = 1.2;
  Scheme scheme{};
};

/// Above this CFL the source-term update needs the limiter.
inline constexpr double kWoCflLimit = 1.5;

/// Raised when a non-finite value appears in f.
class NumericalBlowup : public std::runtime_error {
 public:
  NumericalBlowup(long long step, double t, int i, int j);
  long long step;
  double t;
  int i;
  int j;
};

/// dt = cfl / (v_max / dx + max|E| / dv), v_max being the velocity bound.
double timestep(const PhaseState& state, const FieldE& field, double cfl);

// In-place sweeps with externally supplied per-line speeds. `speeds` has one
// entry per v-row for sweep_x_inplace and one per x-column for
// sweep_v_inplace. When the variant is WL the limiter runs first and flags
// are OR-ed into `mask` (size nx * nv, layout of f). Returns the number of
// cells flagged by that pass.
long long sweep_x_inplace(PhaseState& state, std::span<const double> speeds, double dt,
                          const SchemeVariant& variant, TroubleMask* mask = nullptr);
long long sweep_v_inplace(PhaseState& state, std::span<const double> speeds, double dt,
                          const SchemeVariant& variant, TroubleMask* mask = nullptr);

/// Advection in x with speed v_j per row; updates f, phi and, through the
/// cross-derivative source, psi.
PhaseState sweep_x(PhaseState state, double dt, const SchemeVariant& variant);
/// Advection in v with speed E_i per column; updates f, psi and phi.
PhaseState sweep_v(PhaseState state, const FieldE& field, double dt, const SchemeVariant& variant);

/// Electric field of the current distribution.
FieldE field_of(const PhaseState& state);

struct StepResult {
  PhaseState state;
  FieldE field;  // half-step field used for the v-sweep
  TroubleMask troubled;
  long long troubled_count = 0;
};

/// One Strang step for Vlasov-Poisson: x half step, field solve, v full step,
/// x half step, with limiter passes before each sweep for WL.
StepResult strang_step(PhaseState state, const SchemeVariant& variant, double dt);

/// In-place form; returns the half-step field and writes the union of
/// troubled cells into `mask` when given. A non-finite half-step field raises
/// NumericalBlowup with step 0 and j = -1.
FieldE strang_step_inplace(PhaseState& state, const SchemeVariant& variant, double dt,
                           TroubleMask* mask = nullptr);

struct VpRunOptions {
  double t_final = 0.0;
  SchemeVariant variant{};
  std::vector<double> snapshot_times;
  std::function<void(const PhaseState&, double)> on_snapshot;
  std::function<void(const DiagnosticsRecord&)> on_record;
};

struct VpRunResult {
  PhaseState state;
  std::vector<DiagnosticsRecord> records;
  long long steps = 0;
};

/// Time loop: field -> dt (clipped onto snapshot times and t_final) ->
/// Strang step -> diagnostics. Records hold mass, norms and entropy of the
/// new state, energy with the field of the new state, and E norms of the
/// half-step field.
VpRunResult run_vp(PhaseState initial, const VpRunOptions& options);

struct RotationOptions {
  double angular_speed = 1.0;  // velocity (-w y, w x)
  double t_final = 0.0;
  SchemeVariant variant{};
};

struct RotationResult {
  PhaseState state;
  std::vector<DiagnosticsRecord> records;  // t, mass, l1, l2, entropy, troubled
  long long steps = 0;
  long long max_troubled = 0;
};

/// Rigid-body rotation with the same split structure and no field solve.
/// The state's second grid plays the role of y.
RotationResult run_rotation(PhaseState initial, const RotationOptions& options);

}  // namespace vlasol
