#include "vlasol/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "vlasol/diagnostics.hpp"
#include "vlasol/sl1d.hpp"

namespace vlasol {

namespace {

constexpr double kPi = std::numbers::pi;

struct NamedScenario {
  ScenarioKind kind;
  std::string_view name;
};

constexpr NamedScenario kNames[] = {
    {ScenarioKind::Advect1D_Sine, "advect1d-sine"},
    {ScenarioKind::Advect1D_FourProfile, "advect1d-four"},
    {ScenarioKind::Rotation_Gaussian, "rotation-gaussian"},
    {ScenarioKind::Rotation_LeVeque, "rotation-leveque"},
    {ScenarioKind::Landau_Weak, "landau-weak"},
    {ScenarioKind::Landau_Strong, "landau-strong"},
    {ScenarioKind::TwoStream_A, "two-stream-a"},
    {ScenarioKind::TwoStream_B, "two-stream-b"},
    {ScenarioKind::Custom, "custom"},
};

double maxwellian(double v) { return std::exp(-0.5 * v * v) / std::sqrt(2.0 * kPi); }

/// Four-profile pieces on [-1, 1].
double four_profile(double x) {
  constexpr double a = 0.5;
  constexpr double z = -0.7;
  constexpr double delta = 0.005;
  constexpr double alpha = 10.0;
  const double beta = std::log(2.0) / (36.0 * delta * delta);
  auto g = [&](double c) { return std::exp(-beta * (x - c) * (x - c)); };
  auto f = [&](double c) { return std::sqrt(std::max(1.0 - alpha * alpha * (x - c) * (x - c), 0.0)); };
  if (x >= -0.8 && x <= -0.6) return (g(z - delta) + g(z + delta) + 4.0 * g(z)) / 6.0;
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) return (f(a - delta) + f(a + delta) + 4.0 * f(a)) / 6.0;
  return 0.0;
}

/// Slotted disk, cone and hump on [-0.5, 0.5]^2.
double leveque(double x, double y) {
  constexpr double r0 = 0.15;
  auto dist = [&](double cx, double cy) { return std::hypot(x - cx, y - cy) / r0; };
  const double disk = dist(0.0, 0.25);
  if (disk <= 1.0) return (std::abs(x) >= 0.025 || y >= 0.35) ? 1.0 : 0.0;
  const double cone = dist(0.0, -0.25);
  if (cone <= 1.0) return 1.0 - cone;
  const double hump = dist(-0.25, 0.0);
  if (hump <= 1.0) return 0.25 * (1.0 + std::cos(kPi * hump));
  return 0.0;
}

/// Periodic wrap of x into [lo, lo + len).
double wrap(double x, double lo, double len) {
  const double r = std::fmod(x - lo, len);
  return lo + (r < 0.0 ? r + len : r);
}

void set_sizes(ScenarioConfig& c, int nx, int nv, double t_final) {
  c.nx = nx;
  c.nv = nv;
  c.t_final = t_final;
}

template <typename T>
void read_if(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::string_view scenario_name(ScenarioKind kind) {
  for (const auto& n : kNames) {
    if (n.kind == kind) return n.name;
  }
  throw InvalidArgument("scenario_name: unknown scenario");
}

ScenarioKind parse_scenario(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.kind;
  }
  std::string msg = "unknown scenario '" + std::string(name) + "'; expected one of:";
  for (const auto& n : kNames) msg += " " + std::string(n.name);
  throw InvalidArgument(msg);
}

const std::vector<ScenarioKind>& all_scenarios() {
  static const std::vector<ScenarioKind> kinds = [] {
    std::vector<ScenarioKind> out;
    for (const auto& n : kNames) out.push_back(n.kind);
    return out;
  }();
  return kinds;
}

ProblemClass problem_class(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Advect1D_Sine:
    case ScenarioKind::Advect1D_FourProfile:
      return ProblemClass::Advect1D;
    case ScenarioKind::Rotation_Gaussian:
    case ScenarioKind::Rotation_LeVeque:
      return ProblemClass::Rotation;
    default:
      return ProblemClass::VlasovPoisson;
  }
}

std::string_view variant_name(Variant v) { return v == Variant::WL ? "wl" : "wo"; }

Variant parse_variant(std::string_view name) {
  if (name == "wo") return Variant::WO;
  if (name == "wl") return Variant::WL;
  throw InvalidArgument("unknown variant '" + std::string(name) + "'; expected wo or wl");
}

double default_cfl(Variant v) { return v == Variant::WL ? 2.2 : 1.2; }

void ScenarioConfig::validate() const {
  if (nx <= 0 || nv <= 0) throw InvalidArgument("config: nx and nv must be positive");
  if (!(cfl > 0.0) || !std::isfinite(cfl)) throw InvalidArgument("config: cfl must be positive");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) {
    throw InvalidArgument("config: t_final must be positive");
  }
  if (!(tvb.m_x >= 0.0) || !(tvb.m_v >= 0.0)) throw InvalidArgument("config: TVB constants must be non-negative");
  for (double t : snapshot_times) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("config: snapshot times must be non-negative");
  }
  if (scenario == ScenarioKind::Custom) {
    if (!(custom.k > 0.0) || !(custom.v_max > 0.0)) {
      throw InvalidArgument("config: custom k and v_max must be positive");
    }
  }
}

ScenarioConfig preset(ScenarioKind kind) {
  ScenarioConfig c;
  c.scenario = kind;
  switch (kind) {
    case ScenarioKind::Advect1D_Sine:
      set_sizes(c, 64, 64, 20.0);
      break;
    case ScenarioKind::Advect1D_FourProfile:
      set_sizes(c, 200, 200, 8.0);
      break;
    case ScenarioKind::Rotation_Gaussian:
      set_sizes(c, 160, 160, 2.0 * kPi);
      break;
    case ScenarioKind::Rotation_LeVeque:
      set_sizes(c, 200, 200, 1.0);
      break;
    case ScenarioKind::Landau_Weak:
      set_sizes(c, 64, 128, 60.0);
      break;
    case ScenarioKind::Landau_Strong:
      set_sizes(c, 128, 256, 40.0);
      break;
    case ScenarioKind::TwoStream_A:
      set_sizes(c, 64, 128, 53.0);
      c.tvb = {1.0, 10.0};
      break;
    case ScenarioKind::TwoStream_B:
      set_sizes(c, 512, 512, 70.0);
      c.tvb = {0.1, 0.1};
      break;
    case ScenarioKind::Custom:
      set_sizes(c, 64, 128, 20.0);
      break;
  }
  c.output_dir = "runs/" + std::string(scenario_name(kind));
  return c;
}

nlohmann::json to_json(const ScenarioConfig& c) {
  return {
      {"scenario", scenario_name(c.scenario)},
      {"nx", c.nx},
      {"nv", c.nv},
      {"cfl", c.cfl},
      {"t_final", c.t_final},
      {"variant", variant_name(c.variant)},
      {"tvb", {{"m_x", c.tvb.m_x}, {"m_v", c.tvb.m_v}}},
      {"output_dir", c.output_dir},
      {"snapshot_times", c.snapshot_times},
      {"custom", {{"alpha", c.custom.alpha}, {"k", c.custom.k}, {"v_max", c.custom.v_max}}},
  };
}

ScenarioConfig config_from_json(const nlohmann::json& j, ScenarioConfig c) {
  if (!j.is_object()) throw InvalidArgument("config: expected a JSON object");
  static const std::vector<std::string> known{"scenario", "nx",  "nv",         "cfl",
                                              "t_final",  "variant", "tvb",   "output_dir",
                                              "snapshot_times", "custom"};
  for (const auto& [key, unused] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw InvalidArgument("config: unknown key '" + key + "'");
    }
  }
  try {
    if (j.contains("scenario")) c.scenario = parse_scenario(j.at("scenario").get<std::string>());
    read_if(j, "nx", c.nx);
    read_if(j, "nv", c.nv);
    read_if(j, "cfl", c.cfl);
    read_if(j, "t_final", c.t_final);
    if (j.contains("variant")) c.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("tvb")) {
      read_if(j.at("tvb"), "m_x", c.tvb.m_x);
      read_if(j.at("tvb"), "m_v", c.tvb.m_v);
    }
    read_if(j, "output_dir", c.output_dir);
    read_if(j, "snapshot_times", c.snapshot_times);
    if (j.contains("custom")) {
      read_if(j.at("custom"), "alpha", c.custom.alpha);
      read_if(j.at("custom"), "k", c.custom.k);
      read_if(j.at("custom"), "v_max", c.custom.v_max);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

SchemeVariant scheme_variant(const ScenarioConfig& c) {
  SchemeVariant v;
  v.kind = c.variant;
  v.tvb = c.tvb;
  v.cfl = c.cfl;
  return v;
}

double initial_value_1d(ScenarioKind kind, double x) {
  switch (kind) {
    case ScenarioKind::Advect1D_Sine:
      return std::sin(x);
    case ScenarioKind::Advect1D_FourProfile:
      return four_profile(x);
    default:
      throw InvalidArgument("initial_value_1d: not a 1D scenario");
  }
}

double initial_value_2d(const ScenarioConfig& c, double x, double v) {
  switch (c.scenario) {
    case ScenarioKind::Rotation_Gaussian:
      return std::exp(-x * x - v * v);
    case ScenarioKind::Rotation_LeVeque:
      return leveque(x, v);
    case ScenarioKind::Landau_Weak:
      return (1.0 + 0.01 * std::cos(0.5 * x)) * maxwellian(v);
    case ScenarioKind::Landau_Strong:
      return (1.0 + 0.5 * std::cos(0.5 * x)) * maxwellian(v);
    case ScenarioKind::TwoStream_A: {
      constexpr double alpha = 0.01;
      constexpr double k = 0.5;
      const double pert = 1.0 + alpha * ((std::cos(2 * k * x) + std::cos(3 * k * x)) / 1.2 + std::cos(k * x));
      return 2.0 / (7.0 * std::sqrt(2.0 * kPi)) * (1.0 + 5.0 * v * v) * pert * std::exp(-0.5 * v * v);
    }
    case ScenarioKind::TwoStream_B: {
      constexpr double u = 0.99;
      constexpr double vth = 0.3;
      constexpr double k = 2.0 / 13.0;
      const double beams = std::exp(-(v - u) * (v - u) / (2 * vth * vth)) +
                           std::exp(-(v + u) * (v + u) / (2 * vth * vth));
      return beams / (2.0 * vth * std::sqrt(2.0 * kPi)) * (1.0 + 0.05 * std::cos(k * x));
    }
    case ScenarioKind::Custom:
      return (1.0 + c.custom.alpha * std::cos(c.custom.k * x)) * maxwellian(v);
    default:
      throw InvalidArgument("initial_value_2d: not a 2D scenario");
  }
}

Grid1D grid_1d(const ScenarioConfig& c) {
  switch (c.scenario) {
    case ScenarioKind::Advect1D_Sine:
      return Grid1D(c.nx, 0.0, 2.0 * kPi, Boundary::Periodic);
    case ScenarioKind::Advect1D_FourProfile:
      return Grid1D(c.nx, -1.0, 1.0, Boundary::Periodic);
    default:
      throw InvalidArgument("grid_1d: not a 1D scenario");
  }
}

std::pair<Grid1D, Grid1D> grids_2d(const ScenarioConfig& c) {
  switch (c.scenario) {
    case ScenarioKind::Rotation_Gaussian:
      return {Grid1D(c.nx, -2 * kPi, 2 * kPi, Boundary::Zero), Grid1D(c.nv, -2 * kPi, 2 * kPi, Boundary::Zero)};
    case ScenarioKind::Rotation_LeVeque:
      return {Grid1D(c.nx, -0.5, 0.5, Boundary::Zero), Grid1D(c.nv, -0.5, 0.5, Boundary::Zero)};
    case ScenarioKind::Landau_Weak:
    case ScenarioKind::Landau_Strong:
    case ScenarioKind::TwoStream_A:
      return {Grid1D(c.nx, 0.0, 4 * kPi, Boundary::Periodic), Grid1D(c.nv, -5.0, 5.0, Boundary::Zero)};
    case ScenarioKind::TwoStream_B:
      return {Grid1D(c.nx, 0.0, 13 * kPi, Boundary::Periodic), Grid1D(c.nv, -5.0, 5.0, Boundary::Zero)};
    case ScenarioKind::Custom:
      return {Grid1D(c.nx, 0.0, 2 * kPi / c.custom.k, Boundary::Periodic),
              Grid1D(c.nv, -c.custom.v_max, c.custom.v_max, Boundary::Zero)};
    default:
      throw InvalidArgument("grids_2d: not a 2D scenario");
  }
}

Line build_initial_line(const ScenarioConfig& c) {
  c.validate();
  const Grid1D g = grid_1d(c);
  std::vector<double> f(g.size());
  for (int i = 0; i < g.size(); ++i) f[i] = initial_value_1d(c.scenario, g.point(i));
  return init_line_from_pointvalues(f, g);
}

PhaseState build_initial_state(const ScenarioConfig& c) {
  c.validate();
  const auto [x, v] = grids_2d(c);
  std::vector<double> f(static_cast<std::size_t>(x.size()) * v.size());
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < v.size(); ++j) {
      f[static_cast<std::size_t>(i) * v.size() + j] = initial_value_2d(c, x.point(i), v.point(j));
    }
  }
  return make_phase_state(x, v, std::move(f));
}

double rotation_speed(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Rotation_Gaussian:
      return 1.0;
    case ScenarioKind::Rotation_LeVeque:
      return 2.0 * kPi;
    default:
      throw InvalidArgument("rotation_speed: not a rotation scenario");
  }
}

double exact_1d(ScenarioKind kind, double x, double t) {
  switch (kind) {
    case ScenarioKind::Advect1D_Sine:
      return std::sin(x - t);
    case ScenarioKind::Advect1D_FourProfile:
      return four_profile(wrap(x - t, -1.0, 2.0));
    default:
      throw InvalidArgument("exact_1d: not a 1D scenario");
  }
}

double exact_rotation(const ScenarioConfig& c, double x, double y, double t) {
  const double a = rotation_speed(c.scenario) * t;
  // Foot of the characteristic: rotate back by angle a.
  const double x0 = std::cos(a) * x + std::sin(a) * y;
  const double y0 = -std::sin(a) * x + std::cos(a) * y;
  return initial_value_2d(c, x0, y0);
}

ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact, double weight) {
  if (numeric.size() != exact.size()) throw InvalidArgument("error_norms: size mismatch");
  std::vector<double> abs_err(numeric.size());
  std::vector<double> sq_err(numeric.size());
  ErrorNorms out;
  for (std::size_t k = 0; k < numeric.size(); ++k) {
    const double e = std::abs(numeric[k] - exact[k]);
    abs_err[k] = e;
    sq_err[k] = e * e;
    out.linf = std::max(out.linf, e);
  }
  out.l1 = pairwise_sum(abs_err) * weight;
  out.l2 = std::sqrt(pairwise_sum(sq_err) * weight);
  return out;
}

double table_weight(double cell_volume, int dim) {
  return cell_volume / std::pow(2.0 * kPi, dim);
}

Advect1DResult run_advect1d(const ScenarioConfig& c) {
  Advect1DResult out{build_initial_line(c), 0, 0, {}, 0.0, 0.0, 0.0, 0.0};
  Line& line = out.line;
  const Grid1D g = line.grid;
  const SchemeVariant variant = scheme_variant(c);
  out.mass_initial = pairwise_sum(line.f) * g.dx();

  const double dt_full = c.cfl * g.dx();
  const double eps = 1e-12 * std::max(1.0, c.t_final);
  double t = 0.0;
  AdvectWorkspace ws;
  TroubleMask mask(g.size());
  while (t < c.t_final - eps) {
    double dt = dt_full;
    const bool land = t + dt >= c.t_final - eps;
    if (land) dt = c.t_final - t;
    if (variant.kind == Variant::WL) {
      out.troubled_cells += limit_inplace(line.f, line.h, g, variant.tvb.m_x, mask);
    }
    advect_inplace(line.f, line.h, g, 1.0, dt, variant.scheme, ws);
    t = land ? c.t_final : t + dt;
    ++out.steps;
    for (std::size_t k = 0; k < line.f.size(); ++k) {
      if (!std::isfinite(line.f[k])) throw NumericalBlowup(out.steps, t, static_cast<int>(k), 0);
    }
  }

  std::vector<double> exact(g.size());
  for (int i = 0; i < g.size(); ++i) exact[i] = exact_1d(c.scenario, g.point(i), c.t_final);
  out.error = error_norms(line.f, exact, table_weight(g.dx(), 1));
  out.mass_final = pairwise_sum(line.f) * g.dx();
  out.min_value = *std::min_element(line.f.begin(), line.f.end());
  out.max_value = *std::max_element(line.f.begin(), line.f.end());
  return out;
}

RotationRun run_rotation_scenario(const ScenarioConfig& c) {
  RotationOptions options;
  options.angular_speed = rotation_speed(c.scenario);
  options.t_final = c.t_final;
  options.variant = scheme_variant(c);
  RotationRun out{run_rotation(build_initial_state(c), options), {}};

  const PhaseState& s = out.result.state;
  std::vector<double> exact(s.f.size());
  for (int i = 0; i < s.nx(); ++i) {
    for (int j = 0; j < s.nv(); ++j) {
      exact[static_cast<std::size_t>(i) * s.nv() + j] =
          exact_rotation(c, s.x.point(i), s.v.point(j), c.t_final);
    }
  }
  out.error = error_norms(s.f, exact, table_weight(s.x.dx() * s.v.dx(), 2));
  return out;
}

std::vector<ConvergenceRow> run_convergence(const ScenarioConfig& base, std::span<const int> meshes) {
  const ProblemClass pc = problem_class(base.scenario);
  if (pc == ProblemClass::VlasovPoisson) {
    throw InvalidArgument("convergence: needs a transport or rotation scenario");
  }
  if (meshes.empty()) throw InvalidArgument("convergence: no meshes given");
  std::vector<ConvergenceRow> rows;
  for (int n : meshes) {
    ScenarioConfig c = base;
    c.nx = n;
    c.nv = n;
    ConvergenceRow row;
    row.n = n;
    row.error = pc == ProblemClass::Advect1D ? run_advect1d(c).error : run_rotation_scenario(c).error;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    row.order = {nan, nan, nan};
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      const double r = std::log(static_cast<double>(n) / prev.n);
      row.order.l1 = std::log(prev.error.l1 / row.error.l1) / r;
      row.order.l2 = std::log(prev.error.l2 / row.error.l2) / r;
      row.order.linf = std::log(prev.error.linf / row.error.linf) / r;
    }
    rows.push_back(row);
  }
  return rows;
}

double fitted_order(std::span<const int> n, std::span<const double> error) {
  if (n.size() != error.size() || n.size() < 2) {
    throw InvalidArgument("fitted_order: need at least two matching points");
  }
  const double m = static_cast<double>(n.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    const double x = std::log(static_cast<double>(n[k]));
    const double y = -std::log(error[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::string format_convergence_table(std::span<const ConvergenceRow> rows) {
  std::string out = "     N     L1 error  Order     L2 error  Order   Linf error  Order\n";
  char buf[160];
  auto order = [](double o) {
    char b[16];
    if (std::isnan(o)) return std::string("      -");
    std::snprintf(b, sizeof b, "%7.2f", o);
    return std::string(b);
  };
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%6d  %11.2E%s  %11.2E%s  %11.2E%s\n", r.n, r.error.l1,
                  order(r.order.l1).c_str(), r.error.l2, order(r.order.l2).c_str(), r.error.linf,
                  order(r.order.linf).c_str());
    out += buf;
  }
  return out;
}

}  // namespace vlasol
