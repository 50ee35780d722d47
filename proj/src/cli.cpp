#include "vlasol/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vlasol/diagnostics.hpp"
#include "vlasol/io.hpp"
#include "vlasol/scenarios.hpp"

namespace vlasol {

namespace {

/// Flags shared by the run subcommands; unset flags leave the config alone.
struct RunFlags {
  std::optional<std::string> scenario;
  std::optional<int> nx;
  std::optional<int> nv;
  std::optional<double> cfl;
  std::optional<std::string> variant;
  std::optional<double> mx;
  std::optional<double> mv;
  std::optional<double> tfinal;
  std::optional<std::string> out;
  std::optional<std::string> snapshots;
  std::optional<std::string> config;
};

void add_run_flags(CLI::App* app, RunFlags& f, bool with_nv) {
  app->add_option("--scenario", f.scenario, "Scenario name");
  app->add_option("--nx", f.nx, "Cells in x")->check(CLI::PositiveNumber);
  if (with_nv) app->add_option("--nv", f.nv, "Cells in v (or y)")->check(CLI::PositiveNumber);
  app->add_option("--cfl", f.cfl, "CFL number (default 1.2 for wo, 2.2 for wl)")->check(CLI::PositiveNumber);
  app->add_option("--variant", f.variant, "wo (no limiter) or wl (limiter)")->check(CLI::IsMember({"wo", "wl"}));
  app->add_option("--mx", f.mx, "TVB constant in x")->check(CLI::NonNegativeNumber);
  app->add_option("--mv", f.mv, "TVB constant in v")->check(CLI::NonNegativeNumber);
  app->add_option("--tfinal", f.tfinal, "Final time")->check(CLI::PositiveNumber);
  app->add_option("--out", f.out, "Output directory");
  app->add_option("--snapshots", f.snapshots, "Snapshot times t1,t2,...");
  app->add_option("--config", f.config, "JSON config file; flags override it");
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("bad value in ") + what + ": '" + item + "'");
    }
  }
  return out;
}

/// Preset, then config file, then flags.
ScenarioConfig resolve_config(const RunFlags& f, ScenarioKind fallback) {
  nlohmann::json file = nlohmann::json::object();
  if (f.config) {
    const std::string text = read_text(*f.config);
    try {
      file = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(*f.config + ": " + e.what());
    }
  }
  ScenarioKind kind = fallback;
  if (file.is_object() && file.contains("scenario") && file["scenario"].is_string()) {
    kind = parse_scenario(file["scenario"].get<std::string>());
  }
  if (f.scenario) kind = parse_scenario(*f.scenario);

  ScenarioConfig c = config_from_json(file, preset(kind));
  c.scenario = kind;
  if (f.nx) c.nx = *f.nx;
  if (f.nv) c.nv = *f.nv;
  if (f.variant) c.variant = parse_variant(*f.variant);
  if (f.cfl) {
    c.cfl = *f.cfl;
  } else if (!file.contains("cfl")) {
    c.cfl = default_cfl(c.variant);
  }
  if (f.mx) c.tvb.m_x = *f.mx;
  if (f.mv) c.tvb.m_v = *f.mv;
  if (f.tfinal) c.t_final = *f.tfinal;
  if (f.out) c.output_dir = *f.out;
  if (f.snapshots) c.snapshot_times = parse_list(*f.snapshots, "--snapshots");
  c.validate();
  return c;
}

void require_class(const ScenarioConfig& c, ProblemClass pc, const char* command) {
  if (problem_class(c.scenario) != pc) {
    throw InvalidArgument(std::string(command) + ": scenario '" + std::string(scenario_name(c.scenario)) +
                          "' does not belong to this command");
  }
}

void warn_cfl(const ScenarioConfig& c, std::ostream& err) {
  if (c.variant == Variant::WO && c.cfl > kWoCflLimit) {
    err << "warning: cfl " << c.cfl << " without the limiter may be unstable; use --variant wl above "
        << kWoCflLimit << "\n";
  }
}

std::string snapshot_name(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snapshot_t%g.csv", t);
  return buf;
}

void print_norms(std::ostream& out, const ErrorNorms& e) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "L1 error %.6E  L2 error %.6E  Linf error %.6E\n", e.l1, e.l2, e.linf);
  out << buf;
}

int cmd_advect1d(const RunFlags& f, std::ostream& out, std::ostream& err) {
  const ScenarioConfig c = resolve_config(f, ScenarioKind::Advect1D_Sine);
  require_class(c, ProblemClass::Advect1D, "advect1d");
  warn_cfl(c, err);
  const Advect1DResult r = run_advect1d(c);
  const std::filesystem::path dir = c.output_dir;
  write_text(dir / "config.json", to_json(c).dump(2) + "\n");
  std::string csv = "x,f,exact\n";
  const Grid1D& g = r.line.grid;
  for (int i = 0; i < g.size(); ++i) {
    csv += format_double(g.point(i)) + "," + format_double(r.line.f[i]) + "," +
           format_double(exact_1d(c.scenario, g.point(i), c.t_final)) + "\n";
  }
  write_text(dir / "solution.csv", csv);
  out << "steps " << r.steps << "\n";
  print_norms(out, r.error);
  out << "min " << format_double(r.min_value) << "  max " << format_double(r.max_value) << "\n";
  out << "relative mass deviation "
      << format_double((r.mass_final - r.mass_initial) / std::abs(r.mass_initial)) << "\n";
  return kExitOk;
}

int cmd_rotate(const RunFlags& f, std::ostream& out, std::ostream& err) {
  const ScenarioConfig c = resolve_config(f, ScenarioKind::Rotation_Gaussian);
  require_class(c, ProblemClass::Rotation, "rotate");
  warn_cfl(c, err);
  const RotationRun r = run_rotation_scenario(c);
  const std::filesystem::path dir = c.output_dir;
  write_text(dir / "config.json", to_json(c).dump(2) + "\n");
  emit_diagnostics_csv(r.result.records, dir / "diagnostics.csv");
  emit_snapshot(r.result.state, {std::string(scenario_name(c.scenario)), std::string(variant_name(c.variant)), c.t_final},
                dir / snapshot_name(c.t_final));
  out << "steps " << r.result.steps << "\n";
  print_norms(out, r.error);
  const auto mn = std::minmax_element(r.result.state.f.begin(), r.result.state.f.end());
  out << "min " << format_double(*mn.first) << "  max " << format_double(*mn.second) << "\n";
  out << "max troubled cells per step " << r.result.max_troubled << "\n";
  return kExitOk;
}

int cmd_vp(const RunFlags& f, std::ostream& out, std::ostream& err) {
  const ScenarioConfig c = resolve_config(f, ScenarioKind::Landau_Weak);
  require_class(c, ProblemClass::VlasovPoisson, "vp");
  warn_cfl(c, err);
  const std::filesystem::path dir = c.output_dir;
  write_text(dir / "config.json", to_json(c).dump(2) + "\n");

  VpRunOptions options;
  options.t_final = c.t_final;
  options.variant = scheme_variant(c);
  options.snapshot_times = c.snapshot_times;
  const std::string scenario(scenario_name(c.scenario));
  const std::string variant(variant_name(c.variant));
  options.on_snapshot = [&](const PhaseState& s, double t) {
    emit_snapshot(s, {scenario, variant, t}, dir / snapshot_name(t));
  };
  const VpRunResult r = run_vp(build_initial_state(c), options);
  emit_diagnostics_csv(r.records, dir / "diagnostics.csv");

  std::vector<double> mass;
  for (const auto& rec : r.records) mass.push_back(rec.mass);
  const DeviationSeries dev = relative_deviation(mass);
  double worst = 0.0;
  for (double d : dev.values) worst = std::max(worst, std::abs(d));
  out << "steps " << r.steps << "\n";
  out << "max relative mass deviation " << format_double(worst) << "\n";
  out << "diagnostics " << (dir / "diagnostics.csv").string() << "\n";
  return kExitOk;
}

int cmd_convergence(const RunFlags& f, const std::string& meshes_text, std::ostream& out, std::ostream& err) {
  const ScenarioConfig c = resolve_config(f, ScenarioKind::Advect1D_Sine);
  warn_cfl(c, err);
  std::vector<int> meshes;
  for (double m : parse_list(meshes_text, "--meshes")) {
    if (m < 1 || m != std::floor(m)) throw InvalidArgument("--meshes: expected positive integers");
    meshes.push_back(static_cast<int>(m));
  }
  const auto rows = run_convergence(c, meshes);
  out << format_convergence_table(rows);
  if (rows.size() >= 2) {
    std::vector<double> l1;
    for (const auto& r : rows) l1.push_back(r.error.l1);
    char buf[64];
    std::snprintf(buf, sizeof buf, "fitted L1 order %.3f\n", fitted_order(meshes, l1));
    out << buf;
  }
  return kExitOk;
}

int cmd_rates(const std::string& csv, const std::string& window, const std::string& column, std::ostream& out) {
  const auto w = parse_list(window, "--window");
  if (w.size() != 2 || !(w[0] < w[1])) throw InvalidArgument("--window: expected lo,hi with lo < hi");
  const auto records = load_diagnostics_csv(csv);
  std::vector<double> t, v;
  for (const auto& r : records) {
    t.push_back(r.t);
    v.push_back(column == "e_linf" ? r.e_linf : r.e_l2);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "rate %.6f over [%g, %g] (%zu peaks)\n", fit_rate(t, v, {w[0], w[1]}),
                w[0], w[1], local_maxima(t, v, w[0], w[1]).size());
  out << buf;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conservative semi-Lagrangian HWENO solver for transport and Vlasov-Poisson problems"};
  app.name("vlasol");
  app.require_subcommand(1);

  RunFlags advect_flags, rotate_flags, vp_flags, conv_flags;
  auto* advect = app.add_subcommand("advect1d", "1D transport f_t + f_x = 0");
  add_run_flags(advect, advect_flags, false);
  auto* rotate = app.add_subcommand("rotate", "2D rigid-body rotation");
  add_run_flags(rotate, rotate_flags, true);
  auto* vp = app.add_subcommand("vp", "1D1V Vlasov-Poisson");
  add_run_flags(vp, vp_flags, true);
  auto* conv = app.add_subcommand("convergence", "Error and order table over a mesh sequence");
  add_run_flags(conv, conv_flags, true);
  std::string meshes = "32,64,96,128,160,192";
  conv->add_option("--meshes", meshes, "Mesh sizes n1,n2,...");

  auto* rates = app.add_subcommand("rates", "Fit a growth or decay rate to field peaks in a diagnostics CSV");
  std::string rates_csv, rates_window = "0,30", rates_column = "e_l2";
  rates->add_option("--csv", rates_csv, "Diagnostics CSV")->required();
  rates->add_option("--window", rates_window, "Time window lo,hi");
  rates->add_option("--column", rates_column, "e_l2 or e_linf")->check(CLI::IsMember({"e_l2", "e_linf"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (advect->parsed()) return cmd_advect1d(advect_flags, out, err);
    if (rotate->parsed()) return cmd_rotate(rotate_flags, out, err);
    if (vp->parsed()) return cmd_vp(vp_flags, out, err);
    if (conv->parsed()) return cmd_convergence(conv_flags, meshes, out, err);
    if (rates->parsed()) return cmd_rates(rates_csv, rates_window, rates_column, out);
  } catch (const NumericalBlowup& e) {
    err << "error: " << e.what() << "\n";
    return kExitBlowup;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vlasol
