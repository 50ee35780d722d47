#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlasol/grid.hpp"

namespace vlasol {

/// File-system failure; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g, which round-trips every double.
std::string format_double(double x);

inline constexpr const char* kDiagnosticsHeader =
    "t,mass,l1,l2,energy,entropy,e_l2,e_linf,troubled_cells";

std::string format_diagnostics_csv(std::span<const DiagnosticsRecord> records);
void emit_diagnostics_csv(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path);
std::vector<DiagnosticsRecord> load_diagnostics_csv(const std::filesystem::path& path);

/// Metadata stored next to a snapshot.
struct SnapshotMeta {
  std::string scenario;
  std::string variant;
  double t = 0.0;
};

/// Writes `x,v,f` rows (x outer, v inner) to `path` and a JSON sidecar to
/// sidecar_path(path).
void emit_snapshot(const PhaseState& state, const SnapshotMeta& meta, const std::filesystem::path& path);
std::filesystem::path sidecar_path(const std::filesystem::path& path);

struct Snapshot {
  std::vector<double> x;
  std::vector<double> v;
  std::vector<double> f;
  nlohmann::json meta;
};
Snapshot load_snapshot(const std::filesystem::path& path);

/// Writes text, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace vlasol
