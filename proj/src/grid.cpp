#include "vlasol/grid.hpp"

#include <algorithm>
#include <cmath>

#include "vlasol/limiter.hpp"

namespace vlasol {

namespace {

bool all_finite(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

Grid1D::Grid1D(int n_cells, double lo, double hi, Boundary bc)
    : n_(n_cells), lo_(lo), hi_(hi), dx_((hi - lo) / n_cells), bc_(bc) {
  if (n_cells < kMinCells) {
    throw InvalidArgument("Grid1D: need at least " + std::to_string(kMinCells) + " cells, got " +
                          std::to_string(n_cells));
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw InvalidArgument("Grid1D: need finite lo < hi");
  }
}

std::vector<double> Grid1D::points() const {
  std::vector<double> xs(n_);
  for (int c = 0; c < n_; ++c) xs[c] = point(c);
  return xs;
}

double Line::cell(int c) const {
  const int idx = detail::wrap_index(c, grid.size(), grid.bc());
  return idx < 0 ? 0.0 : f[idx];
}

double Line::face(int k) const {
  const int idx = detail::wrap_index(k, grid.face_count(), grid.bc());
  return idx < 0 ? 0.0 : h[idx];
}

double Line::derivative(int c) const { return (face(c + 1) - face(c)) / grid.dx(); }

void Line::validate() const {
  if (static_cast<int>(f.size()) != grid.size()) {
    throw InvalidArgument("Line: f has " + std::to_string(f.size()) + " entries, grid has " +
                          std::to_string(grid.size()) + " cells");
  }
  if (static_cast<int>(h.size()) != grid.face_count()) {
    throw InvalidArgument("Line: h has " + std::to_string(h.size()) + " entries, expected " +
                          std::to_string(grid.face_count()));
  }
  if (!all_finite(f) || !all_finite(h)) throw InvalidArgument("Line: non-finite entry");
}

Line init_line_from_pointvalues(std::span<const double> f, const Grid1D& grid) {
  if (static_cast<int>(f.size()) != grid.size()) {
    throw InvalidArgument("init_line_from_pointvalues: size does not match grid");
  }
  if (!all_finite(f)) throw InvalidArgument("init_line_from_pointvalues: non-finite input");
  return Line{grid, {f.begin(), f.end()}, weno5_reconstruct_h(f, grid.bc())};
}

double PhaseState::fx(int i, int j) const {
  const int nxf = x.face_count();
  const double* row = phi.data() + static_cast<std::size_t>(j) * nxf;
  const int right = i + 1 < nxf ? i + 1 : 0;
  return (row[right] - row[i]) / x.dx();
}

double PhaseState::fv(int i, int j) const {
  const int nvf = v.face_count();
  const double* col = psi.data() + static_cast<std::size_t>(i) * nvf;
  const int right = j + 1 < nvf ? j + 1 : 0;
  return (col[right] - col[j]) / v.dx();
}

void PhaseState::validate() const {
  const auto cells = static_cast<std::size_t>(nx()) * nv();
  if (f.size() != cells) throw InvalidArgument("PhaseState: f shape mismatch");
  if (phi.size() != static_cast<std::size_t>(nv()) * x.face_count()) {
    throw InvalidArgument("PhaseState: phi shape mismatch");
  }
  if (psi.size() != static_cast<std::size_t>(nx()) * v.face_count()) {
    throw InvalidArgument("PhaseState: psi shape mismatch");
  }
  if (!all_finite(f) || !all_finite(phi) || !all_finite(psi)) {
    throw InvalidArgument("PhaseState: non-finite entry");
  }
}

PhaseState make_phase_state(const Grid1D& x, const Grid1D& v, std::vector<double> f) {
  const int nx = x.size();
  const int nv = v.size();
  if (f.size() != static_cast<std::size_t>(nx) * nv) {
    throw InvalidArgument("make_phase_state: f has wrong size");
  }
  if (!all_finite(f)) throw InvalidArgument("make_phase_state: non-finite input");

  PhaseState s{x, v, std::move(f), {}, {}};
  const int nxf = x.face_count();
  const int nvf = v.face_count();
  s.phi.resize(static_cast<std::size_t>(nv) * nxf);
  s.psi.resize(static_cast<std::size_t>(nx) * nvf);

  std::vector<double> row(nx);
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nx; ++i) row[i] = s.at(i, j);
    const std::vector<double> h = weno5_reconstruct_h(row, x.bc());
    std::copy(h.begin(), h.end(), s.phi.begin() + static_cast<std::ptrdiff_t>(j) * nxf);
  }
  for (int i = 0; i < nx; ++i) {
    const std::span<const double> col(s.f.data() + static_cast<std::size_t>(i) * nv, nv);
    const std::vector<double> h = weno5_reconstruct_h(col, v.bc());
    std::copy(h.begin(), h.end(), s.psi.begin() + static_cast<std::ptrdiff_t>(i) * nvf);
  }
  return s;
}

}  // namespace vlasol
