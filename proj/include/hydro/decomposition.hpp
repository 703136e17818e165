#pragma once

// Rectangular domain decomposition of the grid interior and the shared
// interface buffers the task strategy reads its ghost cells from.

#include <vector>

#include "hydro/euler_kernel.hpp"
#include "hydro/grid.hpp"
#include "hydro/types.hpp"

namespace hydro {

// One subdomain's interior extents plus neighbor-existence flags.
// Decomposition rows split the i axis, decomposition columns split j;
// "down/up" are the i-1/i+1 neighbors, "left/right" the j-1/j+1 ones.
struct Subdomain {
  int imin, imax;
  int jmin, jmax;
  bool has_down, has_up;
  bool has_left, has_right;
};

// p_rows x p_cols tiling of the (1..nx, 1..ny) interior.  Subdomain and
// interface coordinates are 1-based throughout, matching the convention
// "interface (i,j) separates domains (i,j) and (i+1,j)".
class DomainDecomposition {
 public:
  DomainDecomposition(int nx, int ny, int p_rows, int p_cols);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int p_rows() const { return p_rows_; }
  int p_cols() const { return p_cols_; }
  int count() const { return p_rows_ * p_cols_; }

  const Subdomain& at(int di, int dj) const {
    return entries_[static_cast<std::size_t>(di - 1) * p_cols_ + (dj - 1)];
  }

 private:
  int nx_, ny_;
  int p_rows_, p_cols_;
  std::vector<Subdomain> entries_;
};

DomainDecomposition decompose(int nx, int ny, int p_rows, int p_cols);

// Near-even 1-based split of 1..n into `parts` contiguous ranges: the first
// n mod parts ranges get one extra cell.  Returns {lo, hi} of range k
// (0-based k); an empty range has lo > hi.  Shared by the decomposition and
// the fine-grain strip chunking so both partitions agree.
struct IndexRange {
  int lo, hi;
};
IndexRange split_range(int n, int parts, int k);

// Snapshot of the four cell layers straddling one subdomain interface,
// stored in grid component order (mom_a = MomX, mom_b = MomY; the sweep
// swizzle happens at strip assembly).  For a column sweep, interface (di,dj)
// holds rows imax(di,dj)-1 .. imax(di,dj)+2 across columns jmin..jmax: the
// last two rows of domain (di,dj) and the first two of (di+1,dj).  Row-sweep
// interfaces are the transpose (columns jmax-1..jmax+2 across rows).
//
// The descriptor (axis, coordinates, extent) is fixed at construction; only
// the span contents change when the buffer is refilled each sweep.
struct InterfaceBuffer {
  Axis axis;
  int di, dj;
  int lo, hi;  // shared extent: jmin..jmax (column axis) or imin..imax (row)
  std::vector<ConservedState> span;  // 4 layers x (hi-lo+1), layer-major

  int extent() const { return hi - lo + 1; }
  ConservedState& at(int layer, int k) { return span[layer * extent() + k]; }
  const ConservedState& at(int layer, int k) const {
    return span[layer * extent() + k];
  }
  std::size_t bytes() const { return span.size() * sizeof(ConservedState); }
};

// Preallocates the (empty) buffer for interface (di,dj); the neighbor on
// the far side must exist.
InterfaceBuffer make_interface(const DomainDecomposition& decomp, int di,
                               int dj, Axis axis);

// Refills the buffer from the grid.  Reads only; the caller's scheduler is
// responsible for ordering this against neighboring writes.
void fill_interface(const Grid2D& grid, const DomainDecomposition& decomp,
                    InterfaceBuffer& iface);

// Convenience: allocate + fill in one call.
InterfaceBuffer extract_interface(const Grid2D& grid,
                                  const DomainDecomposition& decomp, int di,
                                  int dj, Axis axis);

// Builds the strip for sweep `axis`, global strip `index`, of subdomain
// (di,dj): interior cells come from the grid, ghost cells from the facing
// interface buffers (pass nullptr on wall sides, where grid ghosts are used
// instead).  With pre-sweep interface contents this equals read_strip on the
// pre-sweep grid bitwise -- the property the task strategy's equivalence
// rests on.
void assemble_strip_from_interfaces(const Grid2D& grid,
                                    const DomainDecomposition& decomp, int di,
                                    int dj, Axis axis, int index,
                                    const InterfaceBuffer* iface_lo,
                                    const InterfaceBuffer* iface_hi,
                                    StateStrip& strip);

}  // namespace hydro
