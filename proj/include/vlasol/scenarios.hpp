#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vlasol/grid.hpp"
#include "vlasol/limiter.hpp"
#include "vlasol/solver.hpp"

namespace vlasol {

enum class ScenarioKind {
  Advect1D_Sine,
  Advect1D_FourProfile,
  Rotation_Gaussian,
  Rotation_LeVeque,
  Landau_Weak,
  Landau_Strong,
  TwoStream_A,
  TwoStream_B,
  Custom,
};

enum class ProblemClass { Advect1D, Rotation, VlasovPoisson };

/// Command-line names, e.g. "landau-weak".
std::string_view scenario_name(ScenarioKind kind);
/// Throws InvalidArgument for unknown names.
ScenarioKind parse_scenario(std::string_view name);
const std::vector<ScenarioKind>& all_scenarios();
ProblemClass problem_class(ScenarioKind kind);

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);
/// 1.2 without the limiter, 2.2 with it.
double default_cfl(Variant v);

/// Parameters of the custom scenario: (1 + alpha cos kx) Maxwellian on
/// [0, 2 pi / k] x [-v_max, v_max].
struct CustomParams {
  double alpha = 0.01;
  double k = 0.5;
  double v_max = 5.0;
  bool operator==(const CustomParams&) const = default;
};

/// Everything needed to reproduce a run. For 1D scenarios nv is unused; for
/// rotation nx and nv are the x and y cell counts.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::Landau_Weak;
  int nx = 64;
  int nv = 128;
  double cfl = 1.2;
  double t_final = 60.0;
  Variant variant = Variant::WO;
  TvbConstants tvb{};
  std::string output_dir = "out";
  std::vector<double> snapshot_times;
  CustomParams custom{};

  bool operator==(const ScenarioConfig&) const = default;
  /// Throws InvalidArgument on non-positive sizes, cfl or t_final.
  void validate() const;
};

/// Default configuration of a scenario.
ScenarioConfig preset(ScenarioKind kind);

nlohmann::json to_json(const ScenarioConfig& config);
/// Keys present in `j` override `base`; unknown keys and invalid results are
/// rejected.
ScenarioConfig config_from_json(const nlohmann::json& j, ScenarioConfig base);

SchemeVariant scheme_variant(const ScenarioConfig& config);

/// Initial data at a point.
double initial_value_1d(ScenarioKind kind, double x);
double initial_value_2d(const ScenarioConfig& config, double x, double v);

Grid1D grid_1d(const ScenarioConfig& config);
/// x grid and v (or y) grid.
std::pair<Grid1D, Grid1D> grids_2d(const ScenarioConfig& config);

Line build_initial_line(const ScenarioConfig& config);
PhaseState build_initial_state(const ScenarioConfig& config);

/// Angular speed of the rotation scenarios.
double rotation_speed(ScenarioKind kind);

/// Exact solutions for the transport problems (unit speed, periodic) and for
/// rotation.
double exact_1d(ScenarioKind kind, double x, double t);
double exact_rotation(const ScenarioConfig& config, double x, double y, double t);

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// L1 = sum |e| w, L2 = sqrt(sum e^2 w), Linf = max |e|, with weight w per
/// point.
ErrorNorms error_norms(std::span<const double> numeric, std::span<const double> exact, double weight);

/// Weight used in convergence tables: cell volume over (2 pi)^dim.
double table_weight(double cell_volume, int dim);

struct Advect1DResult {
  Line line;
  long long steps = 0;
  long long troubled_cells = 0;  // summed over steps
  ErrorNorms error;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double min_value = 0.0;
  double max_value = 0.0;
};

/// f_t + f_x = 0 with dt = cfl dx, the last step clipped onto t_final.
Advect1DResult run_advect1d(const ScenarioConfig& config);

/// Rotation run plus its error against the exact solution.
struct RotationRun {
  RotationResult result;
  ErrorNorms error;
};
RotationRun run_rotation_scenario(const ScenarioConfig& config);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms error;
  ErrorNorms order;  // NaN on the first row
};

/// Runs the scenario at each mesh size (square meshes for rotation).
std::vector<ConvergenceRow> run_convergence(const ScenarioConfig& base, std::span<const int> meshes);

/// Least-squares slope of -log(error) against log(n).
double fitted_order(std::span<const int> n, std::span<const double> error);

/// Table with N, then error and order for L1, L2, Linf.
std::string format_convergence_table(std::span<const ConvergenceRow> rows);

}  // namespace vlasol
