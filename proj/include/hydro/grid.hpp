#pragma once

// Global grid storage with a 2-cell ghost border, reflective boundary
// conditions, and the strip READ/WRITE steps shared by every execution
// strategy.

#include <array>
#include <vector>

#include "hydro/euler_kernel.hpp"
#include "hydro/types.hpp"

namespace hydro {

// Four variable planes of (nx+4) x (ny+4) scalars, row-major within a
// plane (j fastest).  Interior cells are (1..nx, 1..ny); ghosts occupy
// i,j in {-1, 0} and {n+1, n+2}.  Interior cells always satisfy the
// positivity invariants; ghost validity is only guaranteed between
// apply_boundary and the next interior write.
//
// Concurrency contract: concurrent reads of any cells, concurrent writes
// only to disjoint strips.  A cell written by one worker may be read by
// another only after a synchronization edge (progress counter, task
// completion, or sweep barrier) -- read_strip/write_strip themselves do no
// synchronization.
class Grid2D {
 public:
  Grid2D(int nx, int ny, double dx, double dy);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }

  // Raw cell access, i in [-1, nx+2], j in [-1, ny+2].
  double& at(Var v, int i, int j) {
    return planes_[static_cast<int>(v)][index(i, j)];
  }
  double at(Var v, int i, int j) const {
    return planes_[static_cast<int>(v)][index(i, j)];
  }

  ConservedState cell(int i, int j) const {
    return {at(Var::Rho, i, j), at(Var::MomX, i, j), at(Var::MomY, i, j),
            at(Var::Ener, i, j)};
  }
  void set_cell(int i, int j, const ConservedState& u) {
    at(Var::Rho, i, j) = u.rho;
    at(Var::MomX, i, j) = u.mom_a;
    at(Var::MomY, i, j) = u.mom_b;
    at(Var::Ener, i, j) = u.ener;
  }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i + 1) * stride_ +
           static_cast<std::size_t>(j + 1);
  }

 private:
  int nx_, ny_;
  double dx_, dy_;
  std::size_t stride_;
  std::array<std::vector<double>, kNumVars> planes_;
};

// Reflective walls on all four sides: ghost layer k mirrors interior layer
// k with the wall-normal momentum negated.  Touches only the four edge
// ghost bands (corner ghosts are never read by any sweep); idempotent.
void apply_boundary(Grid2D& grid);

// Copies cells (lo-2..hi+2, index) [Column] or (index, lo-2..hi+2) [Row]
// into the strip, mapping mom_a to the momentum along the sweep axis.
void read_strip(const Grid2D& grid, Axis axis, int index, int lo, int hi,
                StateStrip& strip);

// Writes the strip interior back to cells (lo..hi, index); ghost positions
// of the strip are not written.  A strip violating positivity is rejected
// before any cell is modified.
void write_strip(Grid2D& grid, Axis axis, int index, int lo, int hi,
                 const StateStrip& strip);

}  // namespace hydro
