#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "vlasol/diagnostics.hpp"
#include "vlasol/scenarios.hpp"
#include "vlasol/solver.hpp"

using namespace vlasol;
using testing_support::kPi;

namespace {

PhaseState small_landau(double alpha = 0.01) {
  ScenarioConfig c = preset(ScenarioKind::Custom);
  c.nx = 16;
  c.nv = 32;
  c.custom.alpha = alpha;
  return build_initial_state(c);
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  return testing_support::max_abs_diff(a, b);
}

SchemeVariant variant(Variant v, double cfl) {
  SchemeVariant s;
  s.kind = v;
  s.cfl = cfl;
  return s;
}

}  // namespace

TEST_CASE("timestep") {
  const Grid1D x(10, 0.0, 1.0, Boundary::Periodic);
  const Grid1D v(8, -2.0, 2.0, Boundary::Zero);
  const PhaseState s = make_phase_state(x, v, std::vector<double>(80, 0.0));
  FieldE e{std::vector<double>(10, 0.0), 1.0};
  // 1 / (2 / 0.1 + 1 / 0.5)
  CHECK(timestep(s, e, 1.0) == doctest::Approx(1.0 / 22.0).epsilon(1e-14));
  e.max_abs = 0.0;
  CHECK(timestep(s, e, 1.2) == doctest::Approx(1.2 * 0.1 / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(timestep(s, e, 0.0), InvalidArgument);

  const PhaseState lw = build_initial_state(preset(ScenarioKind::Landau_Weak));
  const FieldE f = field_of(lw);
  CHECK(f.max_abs == doctest::Approx(0.02).epsilon(1e-2));
  CHECK(timestep(lw, f, 1.2) == doctest::Approx(1.2 / (5.0 / lw.x.dx() + f.max_abs / lw.v.dx())));
}

TEST_CASE("zero time step and zero speeds leave the state unchanged") {
  const PhaseState s0 = small_landau(0.3);
  const SchemeVariant wo = variant(Variant::WO, 1.2);
  const PhaseState a = sweep_x(s0, 0.0, wo);
  CHECK(a.f == s0.f);
  CHECK(a.phi == s0.phi);
  CHECK(a.psi == s0.psi);

  const FieldE zero{std::vector<double>(s0.nx(), 0.0), 0.0};
  const PhaseState b = sweep_v(s0, zero, 0.7, wo);
  CHECK(max_diff(b.f, s0.f) == 0.0);
  CHECK(max_diff(b.phi, s0.phi) == 0.0);
  CHECK(max_diff(b.psi, s0.psi) == 0.0);
}

TEST_CASE("x-independent data is a fixed point of the x sweep") {
  ScenarioConfig c = preset(ScenarioKind::Custom);
  c.nx = 16;
  c.nv = 32;
  c.custom.alpha = 0.0;
  const PhaseState s0 = build_initial_state(c);
  const PhaseState s1 = sweep_x(s0, 0.37, variant(Variant::WO, 1.2));
  CHECK(max_diff(s1.f, s0.f) < 1e-15);
  CHECK(max_diff(s1.phi, s0.phi) < 1e-15);
  CHECK(max_diff(s1.psi, s0.psi) < 1e-15);

  // The uniform Maxwellian carries no field, so a full step keeps it.
  const StepResult r = strang_step(s0, variant(Variant::WL, 2.2), 0.2);
  CHECK(max_diff(r.state.f, s0.f) < 1e-15);
  CHECK(r.field.max_abs < 1e-15);
  CHECK(r.troubled_count == 0);
}

TEST_CASE("one strang step with fractional shifts conserves mass") {
  const PhaseState s0 = small_landau(0.5);
  const double m0 = phase_norm(s0, NormKind::Mass);
  const double dt = 0.4 * s0.v.dx() / field_of(s0).max_abs;
  for (auto v : {Variant::WO, Variant::WL}) {
    const StepResult r = strang_step(s0, variant(v, 2.0), dt);
    CHECK(std::abs(phase_norm(r.state, NormKind::Mass) - m0) < 1e-12 * m0);
  }
}

TEST_CASE("without troubled cells the limited and unlimited schemes agree bitwise") {
  const PhaseState s0 = build_initial_state(preset(ScenarioKind::Landau_Weak));
  PhaseState a = s0;
  PhaseState b = s0;
  const double dt = timestep(s0, field_of(s0), 1.2);
  for (int step = 0; step < 3; ++step) {
    TroubleMask mask;
    strang_step_inplace(a, variant(Variant::WO, 1.2), dt);
    strang_step_inplace(b, variant(Variant::WL, 1.2), dt, &mask);
    CHECK(std::count(mask.begin(), mask.end(), 1) == 0);
  }
  CHECK(a.f == b.f);
  CHECK(a.phi == b.phi);
  CHECK(a.psi == b.psi);
}

TEST_CASE("runs are deterministic") {
  VpRunOptions o;
  o.t_final = 0.5;
  o.variant = variant(Variant::WL, 2.2);
  const VpRunResult a = run_vp(small_landau(0.4), o);
  const VpRunResult b = run_vp(small_landau(0.4), o);
  CHECK(a.state.f == b.state.f);
  CHECK(a.steps == b.steps);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) CHECK(a.records[k].energy == b.records[k].energy);
}

TEST_CASE("time loop lands on snapshot times and the final time") {
  VpRunOptions o;
  o.t_final = 1.0;
  o.snapshot_times = {0.0, 0.33, 1.0};
  std::vector<double> seen;
  o.on_snapshot = [&](const PhaseState&, double t) { seen.push_back(t); };
  int records = 0;
  o.on_record = [&](const DiagnosticsRecord&) { ++records; };
  const VpRunResult r = run_vp(small_landau(), o);
  CHECK(seen == std::vector<double>{0.0, 0.33, 1.0});
  CHECK(r.records.front().t == 0.0);
  CHECK(r.records.back().t == 1.0);
  CHECK(records == static_cast<int>(r.records.size()));
  CHECK(r.records.size() == static_cast<std::size_t>(r.steps + 1));
  bool hit = false;
  for (const auto& rec : r.records) hit = hit || rec.t == 0.33;
  CHECK(hit);
}

TEST_CASE("overflow raises a blow-up error") {
  PhaseState s = small_landau();
  s.at(3, 16) = std::numeric_limits<double>::max();
  VpRunOptions o;
  o.t_final = 1.0;
  CHECK_THROWS_AS(run_vp(s, o), NumericalBlowup);
}

TEST_CASE("bad arguments are rejected") {
  const PhaseState s = small_landau();
  CHECK_THROWS_AS(sweep_x(s, -1.0, {}), InvalidArgument);
  VpRunOptions o;
  CHECK_THROWS_AS(run_vp(s, o), InvalidArgument);
  PhaseState bad = s;
  bad.f[0] = NAN;
  o.t_final = 1.0;
  CHECK_THROWS_AS(run_vp(bad, o), InvalidArgument);
  std::vector<double> speeds(3, 1.0);
  CHECK_THROWS_AS(sweep_x_inplace(bad, speeds, 0.1, {}), InvalidArgument);
}

TEST_CASE("rotation by a full turn returns close to the start") {
  ScenarioConfig c = preset(ScenarioKind::Rotation_Gaussian);
  c.nx = c.nv = 40;
  const RotationRun r = run_rotation_scenario(c);
  CHECK(r.error.linf < 2e-2);
  CHECK(r.result.records.back().t == doctest::Approx(2 * kPi).epsilon(1e-14));
  CHECK(r.result.max_troubled == 0);
}

TEST_CASE("strang splitting error is second order in time") {
  // Same mesh, two step sizes, compared against a run with a much smaller step.
  const PhaseState s0 = small_landau(0.3);
  auto run = [&](int steps) {
    PhaseState s = s0;
    for (int k = 0; k < steps; ++k) strang_step_inplace(s, variant(Variant::WO, 1.0), 0.8 / steps);
    return s.f;
  };
  const auto ref = run(64);
  const double e1 = max_diff(run(4), ref);
  const double e2 = max_diff(run(8), ref);
  CHECK(std::log2(e1 / e2) > 1.7);
}
