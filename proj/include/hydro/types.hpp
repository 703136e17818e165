#pragma once

#include <cstdint>

namespace hydro {

// Conserved fluid state of one cell: mass density, momentum density along
// the current sweep axis, transverse momentum density, total energy density.
// Inside a Grid2D the components are stored in grid order (mom_x, mom_y);
// read_strip/write_strip swap mom_a/mom_b according to the sweep axis.
struct ConservedState {
  double rho;
  double mom_a;
  double mom_b;
  double ener;
};

// Primitive form: density, velocity along sweep axis, transverse velocity,
// pressure.
struct PrimitiveState {
  double rho;
  double vel_a;
  double vel_b;
  double pres;
};

// Flux of the 1D Euler equations through a cell interface, one component per
// conserved variable.
struct FluxVector {
  double mass;
  double mom_a;
  double mom_b;
  double ener;
};

// Ideal-gas model plus the Courant factor used for the time-step bound.
struct GasModel {
  double gamma = 1.4;
  double cfl = 0.8;
};

enum class Axis : std::uint8_t {
  Column,  // strip runs along i (first index), one strip per column j
  Row,     // strip runs along j (second index), one strip per row i
};

enum class Var : std::uint8_t { Rho = 0, MomX = 1, MomY = 2, Ener = 3 };

inline constexpr int kNumVars = 4;
inline constexpr int kGhost = 2;  // ghost depth fixed by the 5-point stencil

}  // namespace hydro
