#pragma once

// Conservation totals, grid checksums, and grid-to-grid comparison.  The
// bitwise digest is the equivalence gate between execution strategies; the
// per-variable sums are the human-readable diagnostic next to it.

#include <array>
#include <cstdint>
#include <string>

#include "hydro/grid.hpp"
#include "hydro/types.hpp"

namespace hydro {

struct ConservationTotals {
  double mass;
  double mom_x;
  double mom_y;
  double energy;
};

// Volume-weighted interior totals, accumulated with a fixed pairwise
// summation tree so the result is one well-defined number, not a function
// of traversal order.
ConservationTotals conservation_totals(const Grid2D& grid);

struct GridChecksum {
  std::array<double, kNumVars> sums;  // plain interior sums per variable
  std::uint64_t digest;               // FNV-1a over the raw interior bytes
};

GridChecksum grid_checksum(const Grid2D& grid);

// 17 significant digits: enough to reproduce the double exactly.
std::string format_digits(double v);
std::string format_checksum(const GridChecksum& sum);

struct BitwiseReport {
  bool equal;
  // First difference, valid when !equal:
  Var var;
  int i, j;
  std::uint64_t bits_a, bits_b;
  std::string describe() const;
};

BitwiseReport compare_bitwise(const Grid2D& a, const Grid2D& b);

struct ToleranceReport {
  double max_rel;  // max over cells of |a-b| / max(|a|, |b|, 1)
  double l1_rel;   // sum |a-b| / sum max(|a|, |b|, 1)
};

ToleranceReport compare_tolerance(const Grid2D& a, const Grid2D& b);

// Largest per-cell deviation from fourfold mirror symmetry (i <-> nx+1-i
// with mom_x negated, j <-> ny+1-j with mom_y negated), scaled per cell by
// max(1, |value|).  A centered blast in a reflective box must keep this at
// rounding level for all time.
double mirror_asymmetry(const Grid2D& grid);

}  // namespace hydro
