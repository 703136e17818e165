#pragma once

// Exact solution of the 1D Euler Riemann problem for an ideal gas.
// This is the project's ground truth: it shares no flux code with the
// solver kernel, so agreement between the two is evidence rather than
// tautology.

#include "hydro/types.hpp"

namespace hydro {

enum class WaveType : std::uint8_t { Shock, Rarefaction };

struct Wave {
  WaveType type;
  double head;  // fastest edge of the wave (== tail for a shock)
  double tail;
};

// Star-region solution of a Riemann problem: the state between the two
// nonlinear waves, plus the wave fan geometry needed for sampling.
struct WaveStructure {
  double p_star;
  double u_star;
  double rho_star_left;
  double rho_star_right;
  Wave left;
  Wave right;
  int iterations;  // root-finder iterations spent on p_star
};

// Solves the pressure equation f_L(p) + f_R(p) + (u_R - u_L) = 0 with a
// bracketed Newton iteration, to 1e-12 relative.  The converged root is
// re-checked against the residual; failure to converge throws.
// States that would generate vacuum are rejected with a Validation error.
WaveStructure exact_riemann(const PrimitiveState& left,
                            const PrimitiveState& right,
                            const GasModel& model);

// Same root, found by plain bisection.  Used to cross-check the Newton
// solver; the two must agree to 1e-12 relative.
double riemann_pstar_bisect(const PrimitiveState& left,
                            const PrimitiveState& right,
                            const GasModel& model);

// Samples the self-similar solution at xi = x/t.  The transverse velocity
// is passively advected: vel_b = left.vel_b left of the contact, right.vel_b
// right of it.
PrimitiveState sample_riemann(const WaveStructure& waves,
                              const PrimitiveState& left,
                              const PrimitiveState& right, double xi,
                              const GasModel& model);

}  // namespace hydro
