#pragma once

// Initial conditions for the shipped test problems.

#include "hydro/grid.hpp"
#include "hydro/types.hpp"

namespace hydro {

// Constant state on the unit square (dx = 1/nx, dy = 1/ny).
Grid2D init_uniform(int nx, int ny, const PrimitiveState& w,
                    const GasModel& model);

// Point explosion: cold ambient gas (rho=1, zero velocity, p scaled so the
// ambient energy density is 1e-5) with a total energy of 1.0 deposited at
// the domain center.  With an odd extent the centered cell is unique; with
// an even extent the two cells tied for the center share the deposit
// equally, keeping the initial data mirror-symmetric (the four-cell split
// on an even-by-even grid is what lets a 64x64 run hold fourfold symmetry
// for all time).
Grid2D init_point_explosion(int nx, int ny, const GasModel& model);

// Shock tube along j: a 4-row-wide tube of n cells on [0,1] (dy = 1/n,
// dx = dy), left half (rho=1, p=1), right half (rho=0.125, p=0.1), at rest.
// The transverse direction stays exactly uniform, so row i=1 against the
// 1D exact solution is the validation profile.
Grid2D init_sod(int n, const GasModel& model);

}  // namespace hydro
