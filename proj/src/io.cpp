#include "vlasol/io.hpp"

#include <cerrno>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vlasol {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(line);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::filesystem::path& path, std::size_t line_no) {
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw IoError(path.string() + ":" + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return x;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path, const std::string& header,
                                               std::size_t columns) {
  std::istringstream in(read_text(path));
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw IoError(path.string() + ": expected header '" + header + "'");
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != columns) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                    std::to_string(columns) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_diagnostics_csv(std::span<const DiagnosticsRecord> records) {
  std::string out = kDiagnosticsHeader;
  out += '\n';
  for (const auto& r : records) {
    for (double x : {r.t, r.mass, r.l1, r.l2, r.energy, r.entropy, r.e_l2, r.e_linf}) {
      out += format_double(x);
      out += ',';
    }
    out += std::to_string(r.troubled_cells);
    out += '\n';
  }
  return out;
}

void emit_diagnostics_csv(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path) {
  write_text(path, format_diagnostics_csv(records));
}

std::vector<DiagnosticsRecord> load_diagnostics_csv(const std::filesystem::path& path) {
  std::vector<DiagnosticsRecord> out;
  std::size_t line_no = 1;
  for (const auto& f : read_csv(path, kDiagnosticsHeader, 9)) {
    ++line_no;
    DiagnosticsRecord r;
    double* slots[] = {&r.t, &r.mass, &r.l1, &r.l2, &r.energy, &r.entropy, &r.e_l2, &r.e_linf};
    for (int k = 0; k < 8; ++k) *slots[k] = parse_double(f[k], path, line_no);
    r.troubled_cells = static_cast<long long>(parse_double(f[8], path, line_no));
    out.push_back(r);
  }
  return out;
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".json";
  return p;
}

void emit_snapshot(const PhaseState& s, const SnapshotMeta& meta, const std::filesystem::path& path) {
  std::string out = "x,v,f\n";
  out.reserve(out.size() + s.f.size() * 64);
  for (int i = 0; i < s.nx(); ++i) {
    const std::string xs = format_double(s.x.point(i));
    for (int j = 0; j < s.nv(); ++j) {
      out += xs;
      out += ',';
      out += format_double(s.v.point(j));
      out += ',';
      out += format_double(s.at(i, j));
      out += '\n';
    }
  }
  write_text(path, out);

  auto grid_json = [](const Grid1D& g) {
    return nlohmann::json{{"n", g.size()},
                          {"lo", g.lo()},
                          {"hi", g.hi()},
                          {"bc", g.bc() == Boundary::Periodic ? "periodic" : "zero"}};
  };
  const nlohmann::json side{{"scenario", meta.scenario},
                            {"variant", meta.variant},
                            {"t", meta.t},
                            {"x", grid_json(s.x)},
                            {"v", grid_json(s.v)}};
  write_text(sidecar_path(path), side.dump(2) + "\n");
}

Snapshot load_snapshot(const std::filesystem::path& path) {
  Snapshot snap;
  std::size_t line_no = 1;
  for (const auto& f : read_csv(path, "x,v,f", 3)) {
    ++line_no;
    snap.x.push_back(parse_double(f[0], path, line_no));
    snap.v.push_back(parse_double(f[1], path, line_no));
    snap.f.push_back(parse_double(f[2], path, line_no));
  }
  const auto side = sidecar_path(path);
  try {
    snap.meta = nlohmann::json::parse(read_text(side));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(side.string() + ": " + e.what());
  }
  return snap;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError(path.string() + ": write failed");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace vlasol
