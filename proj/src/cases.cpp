#include "hydro/cases.hpp"

#include <string>
#include <vector>

#include "hydro/errors.hpp"
#include "hydro/euler_kernel.hpp"

namespace hydro {

Grid2D init_uniform(int nx, int ny, const PrimitiveState& w,
                    const GasModel& model) {
  Grid2D grid(nx, ny, 1.0 / nx, 1.0 / ny);
  const ConservedState u = prim_to_cons(w, model);
  for (int i = 1; i <= nx; ++i) {
    for (int j = 1; j <= ny; ++j) {
      grid.set_cell(i, j, u);
    }
  }
  return grid;
}

namespace {

// Interior indices of the cell(s) whose centers are nearest the midpoint of
// an n-cell axis: one for odd n, the two tied cells for even n.
std::vector<int> center_cells(int n) {
  if (n % 2 == 1) return {(n + 1) / 2};
  return {n / 2, n / 2 + 1};
}

}  // namespace

Grid2D init_point_explosion(int nx, int ny, const GasModel& model) {
  if (nx < 4 || ny < 4) {
    throw ConfigError("point explosion needs a grid of at least 4x4, got " +
                      std::to_string(nx) + "x" + std::to_string(ny));
  }
  const double ambient_pres = 1e-5 * (model.gamma - 1.0);
  Grid2D grid = init_uniform(nx, ny, {1.0, 0.0, 0.0, ambient_pres}, model);

  const std::vector<int> ci = center_cells(nx);
  const std::vector<int> cj = center_cells(ny);
  const double share = 1.0 / (static_cast<double>(ci.size()) * cj.size());
  const double volume = grid.dx() * grid.dy();
  for (int i : ci) {
    for (int j : cj) {
      grid.at(Var::Ener, i, j) = share / volume;
    }
  }
  return grid;
}

Grid2D init_sod(int n, const GasModel& model) {
  if (n < 8) {
    throw ConfigError("shock tube needs at least 8 cells, got " +
                      std::to_string(n));
  }
  const double dy = 1.0 / n;
  Grid2D grid(4, n, dy, dy);
  const ConservedState left = prim_to_cons({1.0, 0.0, 0.0, 1.0}, model);
  const ConservedState right = prim_to_cons({0.125, 0.0, 0.0, 0.1}, model);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= n; ++j) {
      grid.set_cell(i, j, j <= n / 2 ? left : right);
    }
  }
  return grid;
}

}  // namespace hydro
