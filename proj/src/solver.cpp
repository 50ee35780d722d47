#include "vlasol/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "vlasol/diagnostics.hpp"
#include "vlasol/parallel.hpp"
#include "vlasol/recon.hpp"

namespace vlasol {

namespace {

constexpr std::array<double, 4> kSourceWeights{
    coeff::kSourceFaceStencil[0].value(), coeff::kSourceFaceStencil[1].value(),
    coeff::kSourceFaceStencil[2].value(), coeff::kSourceFaceStencil[3].value()};

/// faces[k] -= dt/2 (F_old(k) + F_new(k)), with F(k) the face flux of the
/// source s over cells k-2..k+1. s is read with the given stride.
void apply_source(double* faces, int nfaces, const double* s_old, const double* s_new,
                  std::size_t stride, int n, Boundary bc, double dt) {
  auto both = [&](int c) {
    const int idx = detail::wrap_index(c, n, bc);
    return idx < 0 ? 0.0 : s_old[idx * stride] + s_new[idx * stride];
  };
  for (int k = 0; k < nfaces; ++k) {
    double flux = 0.0;
    for (int m = 0; m < 4; ++m) flux += kSourceWeights[m] * both(k - 2 + m);
    faces[k] -= 0.5 * dt * flux;
  }
}

void check_speeds(std::span<const double> speeds, int expected, const char* who) {
  if (static_cast<int>(speeds.size()) != expected) {
    throw InvalidArgument(std::string(who) + ": expected " + std::to_string(expected) +
                          " speeds, got " + std::to_string(speeds.size()));
  }
  for (double s : speeds) {
    if (!std::isfinite(s)) throw InvalidArgument(std::string(who) + ": non-finite speed");
  }
}

std::vector<double> source_x(const PhaseState& s, std::span<const double> row_speeds) {
  std::vector<double> out(s.f.size());
  for (int i = 0; i < s.nx(); ++i) {
    for (int j = 0; j < s.nv(); ++j) out[static_cast<std::size_t>(i) * s.nv() + j] = row_speeds[j] * s.fx(i, j);
  }
  return out;
}

std::vector<double> source_v(const PhaseState& s, std::span<const double> col_speeds) {
  std::vector<double> out(s.f.size());
  for (int i = 0; i < s.nx(); ++i) {
    for (int j = 0; j < s.nv(); ++j) out[static_cast<std::size_t>(i) * s.nv() + j] = col_speeds[i] * s.fv(i, j);
  }
  return out;
}

std::pair<long long, int> first_nonfinite(const PhaseState& s) {
  for (std::size_t k = 0; k < s.f.size(); ++k) {
    if (!std::isfinite(s.f[k])) return {static_cast<long long>(k), 0};
  }
  return {-1, 0};
}

void check_finite(const PhaseState& s, long long step, double t) {
  const auto [k, unused] = first_nonfinite(s);
  if (k >= 0) {
    throw NumericalBlowup(step, t, static_cast<int>(k / s.nv()), static_cast<int>(k % s.nv()));
  }
}

double bound(const Grid1D& g) { return std::max(std::abs(g.lo()), std::abs(g.hi())); }

}  // namespace

NumericalBlowup::NumericalBlowup(long long step_, double t_, int i_, int j_)
    : std::runtime_error("non-finite value at step " + std::to_string(step_) + " (t = " +
                         std::to_string(t_) + "), cell (" + std::to_string(i_) + ", " +
                         std::to_string(j_) + ")"),
      step(step_),
      t(t_),
      i(i_),
      j(j_) {}

double timestep(const PhaseState& state, const FieldE& field, double cfl) {
  if (!(cfl > 0.0)) throw InvalidArgument("timestep: cfl must be positive");
  return cfl / (bound(state.v) / state.x.dx() + field.max_abs / state.v.dx());
}

long long sweep_x_inplace(PhaseState& s, std::span<const double> speeds, double dt,
                          const SchemeVariant& variant, TroubleMask* mask) {
  if (!(dt >= 0.0)) throw InvalidArgument("sweep_x: dt must be non-negative");
  check_speeds(speeds, s.nv(), "sweep_x");
  const int nx = s.nx();
  const int nv = s.nv();
  const int nxf = s.x.face_count();
  const int nvf = s.v.face_count();
  std::atomic<long long> flagged{0};

  if (variant.kind == Variant::WL) {
    parallel_for(nv, [&](int begin, int end) {
      std::vector<double> row(nx);
      TroubleMask local(nx);
      long long count = 0;
      for (int j = begin; j < end; ++j) {
        for (int i = 0; i < nx; ++i) row[i] = s.at(i, j);
        count += limit_inplace(row, std::span(s.phi).subspan(std::size_t(j) * nxf, nxf), s.x,
                               variant.tvb.m_x, local);
        if (mask) {
          for (int i = 0; i < nx; ++i) (*mask)[std::size_t(i) * nv + j] |= local[i];
        }
      }
      flagged += count;
    });
  }
  if (dt == 0.0) return flagged;

  const std::vector<double> s_old = source_x(s, speeds);
  parallel_for(nv, [&](int begin, int end) {
    std::vector<double> row(nx);
    AdvectWorkspace ws;
    for (int j = begin; j < end; ++j) {
      for (int i = 0; i < nx; ++i) row[i] = s.at(i, j);
      advect_inplace(row, std::span(s.phi).subspan(std::size_t(j) * nxf, nxf), s.x, speeds[j], dt,
                     variant.scheme, ws);
      for (int i = 0; i < nx; ++i) s.at(i, j) = row[i];
    }
  });
  const std::vector<double> s_new = source_x(s, speeds);
  parallel_for(nx, [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const std::size_t off = std::size_t(i) * nv;
      apply_source(s.psi.data() + std::size_t(i) * nvf, nvf, s_old.data() + off,
                   s_new.data() + off, 1, nv, s.v.bc(), dt);
    }
  });
  return flagged;
}

long long sweep_v_inplace(PhaseState& s, std::span<const double> speeds, double dt,
                          const SchemeVariant& variant, TroubleMask* mask) {
  if (!(dt >= 0.0)) throw InvalidArgument("sweep_v: dt must be non-negative");
  check_speeds(speeds, s.nx(), "sweep_v");
  const int nx = s.nx();
  const int nv = s.nv();
  const int nxf = s.x.face_count();
  const int nvf = s.v.face_count();
  std::atomic<long long> flagged{0};

  if (variant.kind == Variant::WL) {
    parallel_for(nx, [&](int begin, int end) {
      TroubleMask local(nv);
      long long count = 0;
      for (int i = begin; i < end; ++i) {
        const std::span<const double> col(s.f.data() + std::size_t(i) * nv, nv);
        count += limit_inplace(col, std::span(s.psi).subspan(std::size_t(i) * nvf, nvf), s.v,
                               variant.tvb.m_v, local);
        if (mask) {
          for (int j = 0; j < nv; ++j) (*mask)[std::size_t(i) * nv + j] |= local[j];
        }
      }
      flagged += count;
    });
  }
  if (dt == 0.0) return flagged;

  const std::vector<double> s_old = source_v(s, speeds);
  parallel_for(nx, [&](int begin, int end) {
    AdvectWorkspace ws;
    for (int i = begin; i < end; ++i) {
      advect_inplace(std::span(s.f).subspan(std::size_t(i) * nv, nv),
                     std::span(s.psi).subspan(std::size_t(i) * nvf, nvf), s.v, speeds[i], dt,
                     variant.scheme, ws);
    }
  });
  const std::vector<double> s_new = source_v(s, speeds);
  parallel_for(nv, [&](int begin, int end) {
    for (int j = begin; j < end; ++j) {
      apply_source(s.phi.data() + std::size_t(j) * nxf, nxf, s_old.data() + j, s_new.data() + j,
                   nv, nx, s.x.bc(), dt);
    }
  });
  return flagged;
}

PhaseState sweep_x(PhaseState state, double dt, const SchemeVariant& variant) {
  state.validate();
  const std::vector<double> speeds = state.v.points();
  sweep_x_inplace(state, speeds, dt, variant);
  return state;
}

PhaseState sweep_v(PhaseState state, const FieldE& field, double dt, const SchemeVariant& variant) {
  state.validate();
  sweep_v_inplace(state, field.e, dt, variant);
  return state;
}

FieldE field_of(const PhaseState& state) {
  return solve_field(compute_rho(state), state.x.length());
}

FieldE strang_step_inplace(PhaseState& state, const SchemeVariant& variant, double dt,
                           TroubleMask* mask) {
  if (!(dt >= 0.0)) throw InvalidArgument("strang_step: dt must be non-negative");
  if (mask) mask->assign(state.f.size(), 0);
  const std::vector<double> velocities = state.v.points();
  sweep_x_inplace(state, velocities, 0.5 * dt, variant, mask);
  FieldE half = field_of(state);
  for (std::size_t i = 0; i < half.e.size(); ++i) {
    if (!std::isfinite(half.e[i])) throw NumericalBlowup(0, 0.0, static_cast<int>(i), -1);
  }
  sweep_v_inplace(state, half.e, dt, variant, mask);
  sweep_x_inplace(state, velocities, 0.5 * dt, variant, mask);
  return half;
}

StepResult strang_step(PhaseState state, const SchemeVariant& variant, double dt) {
  state.validate();
  StepResult out{std::move(state), {}, {}, 0};
  out.field = strang_step_inplace(out.state, variant, dt, &out.troubled);
  out.troubled_count = std::count_if(out.troubled.begin(), out.troubled.end(),
                                     [](std::uint8_t b) { return b != 0; });
  return out;
}

namespace {

/// Next time the loop must land on exactly.
double next_target(double t, double t_final, const std::vector<double>& snapshots, double eps) {
  double target = t_final;
  for (double ts : snapshots) {
    if (ts > t + eps && ts < target) target = ts;
  }
  return target;
}

}  // namespace

VpRunResult run_vp(PhaseState initial, const VpRunOptions& options) {
  initial.validate();
  if (!(options.t_final > 0.0)) throw InvalidArgument("run_vp: t_final must be positive");
  const double eps = 1e-12 * std::max(1.0, options.t_final);
  std::vector<double> snapshots = options.snapshot_times;
  std::sort(snapshots.begin(), snapshots.end());

  VpRunResult out{std::move(initial), {}, 0};
  PhaseState& s = out.state;
  FieldE field = field_of(s);
  auto emit = [&](const DiagnosticsRecord& r) {
    out.records.push_back(r);
    if (options.on_record) options.on_record(r);
  };
  emit(make_record(0.0, s, field, field, 0));

  std::size_t next_snapshot = 0;
  auto flush_snapshots = [&](double t) {
    while (next_snapshot < snapshots.size() && snapshots[next_snapshot] <= t + eps) {
      if (options.on_snapshot) options.on_snapshot(s, snapshots[next_snapshot]);
      ++next_snapshot;
    }
  };
  flush_snapshots(0.0);

  double t = 0.0;
  TroubleMask mask;
  while (t < options.t_final - eps) {
    double dt = timestep(s, field, options.variant.cfl);
    // An overflowing field drives dt to zero and would stall the loop.
    if (!(dt > 0.0) || !std::isfinite(dt)) throw NumericalBlowup(out.steps + 1, t, -1, -1);
    const double target = next_target(t, options.t_final, snapshots, eps);
    const bool land = t + dt >= target - eps;
    if (land) dt = target - t;

    FieldE half;
    try {
      half = strang_step_inplace(s, options.variant, dt, &mask);
    } catch (const NumericalBlowup& e) {
      throw NumericalBlowup(out.steps + 1, t, e.i, e.j);
    }
    t = land ? target : t + dt;
    ++out.steps;
    check_finite(s, out.steps, t);

    field = field_of(s);
    const long long troubled =
        std::count_if(mask.begin(), mask.end(), [](std::uint8_t b) { return b != 0; });
    emit(make_record(t, s, field, half, troubled));
    flush_snapshots(t);
  }
  return out;
}

RotationResult run_rotation(PhaseState initial, const RotationOptions& options) {
  initial.validate();
  if (!(options.t_final > 0.0)) throw InvalidArgument("run_rotation: t_final must be positive");
  const double w = options.angular_speed;
  const double eps = 1e-12 * std::max(1.0, options.t_final);

  RotationResult out{std::move(initial), {}, 0, 0};
  PhaseState& s = out.state;
  std::vector<double> row_speeds = s.v.points();  // -w y_j
  for (double& y : row_speeds) y *= -w;
  std::vector<double> col_speeds = s.x.points();  // w x_i
  for (double& x : col_speeds) x *= w;

  const double dt_full = options.variant.cfl /
                         (std::abs(w) * bound(s.v) / s.x.dx() + std::abs(w) * bound(s.x) / s.v.dx());
  const FieldE no_field{std::vector<double>(s.nx(), 0.0), 0.0};
  out.records.push_back(make_record(0.0, s, no_field, no_field, 0));

  double t = 0.0;
  TroubleMask mask;
  while (t < options.t_final - eps) {
    double dt = dt_full;
    const bool land = t + dt >= options.t_final - eps;
    if (land) dt = options.t_final - t;

    mask.assign(s.f.size(), 0);
    sweep_x_inplace(s, row_speeds, 0.5 * dt, options.variant, &mask);
    sweep_v_inplace(s, col_speeds, dt, options.variant, &mask);
    sweep_x_inplace(s, row_speeds, 0.5 * dt, options.variant, &mask);
    t = land ? options.t_final : t + dt;
    ++out.steps;
    check_finite(s, out.steps, t);

    const long long troubled =
        std::count_if(mask.begin(), mask.end(), [](std::uint8_t b) { return b != 0; });
    out.max_troubled = std::max(out.max_troubled, troubled);
    out.records.push_back(make_record(t, s, no_field, no_field, troubled));
  }
  return out;
}

}  // namespace vlasol
