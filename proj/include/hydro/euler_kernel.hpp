#pragma once

// Strip-level physics: state conversions, wave speeds, the CFL time-step
// bound, and the second-order Godunov update of one strip.  Everything here
// is a pure function of its arguments; all execution strategies call the
// same compiled kernel, which is what makes their results bitwise equal.

#include <cstddef>
#include <vector>

#include "hydro/errors.hpp"
#include "hydro/types.hpp"

namespace hydro {

class Grid2D;

// One row or column of cells plus 2 ghost cells on each end, copied out of
// the grid into a dense buffer.  Interior cells sit at [2, n+2); mom_a is
// the momentum along the strip.
struct StateStrip {
  std::vector<ConservedState> cells;
  int n = 0;        // interior length
  double dx = 0.0;  // cell width along the strip

  int size() const { return n + 2 * kGhost; }
};

PrimitiveState cons_to_prim(const ConservedState& u, const GasModel& model);
ConservedState prim_to_cons(const PrimitiveState& w, const GasModel& model);

double sound_speed(const PrimitiveState& w, const GasModel& model);

// Physical flux F(U) of the 1D Euler equations, in primitive form.
FluxVector physical_flux(const PrimitiveState& w, const GasModel& model);

// minmod limiter: zero at extrema or sign changes, otherwise the
// smaller-magnitude one-sided difference.
double slope_minmod(double w_left, double w_mid, double w_right);

// HLLC approximate Riemann flux with Davis wave-speed bounds.  Identical
// states return the exact physical flux; a fully supersonic left state
// returns F(U_left) exactly.
FluxVector riemann_flux(const PrimitiveState& w_left,
                        const PrimitiveState& w_right, const GasModel& model);

// Scratch arrays reused across sweep_strip calls so the hot loop does not
// allocate.  One per worker.
struct KernelScratch {
  std::vector<PrimitiveState> prim;
  std::vector<PrimitiveState> slope;
  std::vector<PrimitiveState> face_left;   // evolved state at the left face
  std::vector<PrimitiveState> face_right;  // evolved state at the right face
  std::vector<FluxVector> flux;
};

// Boundary-most interface fluxes of a sweep, for conservation audits: the
// interior total changes by exactly dt/dx * (first - last) per variable.
struct StripFluxes {
  FluxVector first;
  FluxVector last;
};

// MUSCL-Hancock update of the strip interior in place: primitive
// conversion, minmod-limited slopes, half-dt predictor, HLLC fluxes,
// conservative correction.  Ghost cells are left untouched.  Cell i of the
// output depends on input cells i-2..i+2 only.
StripFluxes sweep_strip(StateStrip& strip, double dt, const GasModel& model,
                        KernelScratch& scratch);

// Per-cell signal-speed bound used by the dt reduction; kept out of line so
// every caller runs the identical compiled arithmetic.
double cell_dt_limit(const ConservedState& u, double min_spacing,
                     const GasModel& model);

// CFL-limited time step over the grid interior.  A pure min-reduction, so
// the result is bitwise identical for any traversal or partition order.
double compute_dt(const Grid2D& grid, const GasModel& model);

}  // namespace hydro
