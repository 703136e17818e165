#include "hydro/grid.hpp"

#include <string>

#include "hydro/errors.hpp"

namespace hydro {

Grid2D::Grid2D(int nx, int ny, double dx, double dy)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), stride_(ny + 2 * kGhost) {
  if (nx < 4 || ny < 4) {
    throw ConfigError("grid interior must be at least 4x4, got " +
                      std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (!(dx > 0.0) || !(dy > 0.0)) {
    throw ConfigError("cell sizes must be positive");
  }
  const std::size_t count =
      static_cast<std::size_t>(nx + 2 * kGhost) * stride_;
  for (auto& plane : planes_) plane.assign(count, 0.0);
}

void apply_boundary(Grid2D& grid) {
  const int nx = grid.nx();
  const int ny = grid.ny();

  // Left/right walls: mirror in i, negate x-momentum.
  for (int layer = 1; layer <= kGhost; ++layer) {
    const int ghost_lo = 1 - layer;
    const int ghost_hi = nx + layer;
    for (int j = 1; j <= ny; ++j) {
      grid.at(Var::Rho, ghost_lo, j) = grid.at(Var::Rho, layer, j);
      grid.at(Var::MomX, ghost_lo, j) = -grid.at(Var::MomX, layer, j);
      grid.at(Var::MomY, ghost_lo, j) = grid.at(Var::MomY, layer, j);
      grid.at(Var::Ener, ghost_lo, j) = grid.at(Var::Ener, layer, j);

      grid.at(Var::Rho, ghost_hi, j) = grid.at(Var::Rho, nx + 1 - layer, j);
      grid.at(Var::MomX, ghost_hi, j) = -grid.at(Var::MomX, nx + 1 - layer, j);
      grid.at(Var::MomY, ghost_hi, j) = grid.at(Var::MomY, nx + 1 - layer, j);
      grid.at(Var::Ener, ghost_hi, j) = grid.at(Var::Ener, nx + 1 - layer, j);
    }
  }

  // Bottom/top walls: mirror in j, negate y-momentum.
  for (int layer = 1; layer <= kGhost; ++layer) {
    const int ghost_lo = 1 - layer;
    const int ghost_hi = ny + layer;
    for (int i = 1; i <= nx; ++i) {
      grid.at(Var::Rho, i, ghost_lo) = grid.at(Var::Rho, i, layer);
      grid.at(Var::MomX, i, ghost_lo) = grid.at(Var::MomX, i, layer);
      grid.at(Var::MomY, i, ghost_lo) = -grid.at(Var::MomY, i, layer);
      grid.at(Var::Ener, i, ghost_lo) = grid.at(Var::Ener, i, layer);

      grid.at(Var::Rho, i, ghost_hi) = grid.at(Var::Rho, i, ny + 1 - layer);
      grid.at(Var::MomX, i, ghost_hi) = grid.at(Var::MomX, i, ny + 1 - layer);
      grid.at(Var::MomY, i, ghost_hi) = -grid.at(Var::MomY, i, ny + 1 - layer);
      grid.at(Var::Ener, i, ghost_hi) = grid.at(Var::Ener, i, ny + 1 - layer);
    }
  }
}

void read_strip(const Grid2D& grid, Axis axis, int index, int lo, int hi,
                StateStrip& strip) {
  const int max_extent = (axis == Axis::Column) ? grid.nx() : grid.ny();
  if (lo > hi || lo - kGhost < -1 || hi + kGhost > max_extent + 2) {
    throw ConfigError("strip range [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] out of grid storage");
  }
  const int cross_extent = (axis == Axis::Column) ? grid.ny() : grid.nx();
  if (index < 1 || index > cross_extent) {
    throw ConfigError("strip index " + std::to_string(index) +
                      " out of interior range");
  }

  strip.n = hi - lo + 1;
  strip.dx = (axis == Axis::Column) ? grid.dx() : grid.dy();
  strip.cells.resize(strip.size());

  if (axis == Axis::Column) {
    for (int k = 0; k < strip.size(); ++k) {
      const int i = lo - kGhost + k;
      strip.cells[k] = {grid.at(Var::Rho, i, index),
                        grid.at(Var::MomX, i, index),
                        grid.at(Var::MomY, i, index),
                        grid.at(Var::Ener, i, index)};
    }
  } else {
    for (int k = 0; k < strip.size(); ++k) {
      const int j = lo - kGhost + k;
      strip.cells[k] = {grid.at(Var::Rho, index, j),
                        grid.at(Var::MomY, index, j),
                        grid.at(Var::MomX, index, j),
                        grid.at(Var::Ener, index, j)};
    }
  }
}

void write_strip(Grid2D& grid, Axis axis, int index, int lo, int hi,
                 const StateStrip& strip) {
  if (strip.n != hi - lo + 1) {
    throw ConfigError("strip interior length " + std::to_string(strip.n) +
                      " does not match range [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }

  // Validation gate: reject before modifying anything.
  for (int k = kGhost; k < kGhost + strip.n; ++k) {
    const ConservedState& u = strip.cells[k];
    if (!(u.rho > 0.0)) {
      throw PositivityError("rho", "strip cell " + std::to_string(k - kGhost) +
                                       " on write-back");
    }
    const double eint =
        u.ener - 0.5 * (u.mom_a * u.mom_a + u.mom_b * u.mom_b) / u.rho;
    if (!(eint > 0.0)) {
      throw PositivityError("internal energy",
                            "strip cell " + std::to_string(k - kGhost) +
                                " on write-back");
    }
  }

  if (axis == Axis::Column) {
    for (int k = kGhost; k < kGhost + strip.n; ++k) {
      const int i = lo - kGhost + k;
      const ConservedState& u = strip.cells[k];
      grid.at(Var::Rho, i, index) = u.rho;
      grid.at(Var::MomX, i, index) = u.mom_a;
      grid.at(Var::MomY, i, index) = u.mom_b;
      grid.at(Var::Ener, i, index) = u.ener;
    }
  } else {
    for (int k = kGhost; k < kGhost + strip.n; ++k) {
      const int j = lo - kGhost + k;
      const ConservedState& u = strip.cells[k];
      grid.at(Var::Rho, index, j) = u.rho;
      grid.at(Var::MomY, index, j) = u.mom_a;
      grid.at(Var::MomX, index, j) = u.mom_b;
      grid.at(Var::Ener, index, j) = u.ener;
    }
  }
}

}  // namespace hydro
