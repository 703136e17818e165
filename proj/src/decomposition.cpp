#include "hydro/decomposition.hpp"

#include <string>

#include "hydro/errors.hpp"

namespace hydro {

IndexRange split_range(int n, int parts, int k) {
  const int base = n / parts;
  const int extra = n % parts;
  // Ranges 0..extra-1 are (base+1) wide, the rest base wide.
  const int lo = 1 + k * base + (k < extra ? k : extra);
  const int width = base + (k < extra ? 1 : 0);
  return {lo, lo + width - 1};
}

DomainDecomposition::DomainDecomposition(int nx, int ny, int p_rows,
                                         int p_cols)
    : nx_(nx), ny_(ny), p_rows_(p_rows), p_cols_(p_cols) {
  if (p_rows < 1 || p_cols < 1) {
    throw ConfigError("decomposition needs at least 1x1 subdomains");
  }
  if (p_rows > nx / 2 || p_cols > ny / 2) {
    throw ConfigError("decomposition " + std::to_string(p_rows) + "x" +
                      std::to_string(p_cols) + " too fine for a " +
                      std::to_string(nx) + "x" + std::to_string(ny) +
                      " interior: every subdomain needs >= 2 cells per axis");
  }

  entries_.reserve(static_cast<std::size_t>(p_rows) * p_cols);
  for (int di = 1; di <= p_rows; ++di) {
    const IndexRange rows = split_range(nx, p_rows, di - 1);
    for (int dj = 1; dj <= p_cols; ++dj) {
      const IndexRange cols = split_range(ny, p_cols, dj - 1);
      Subdomain s;
      s.imin = rows.lo;
      s.imax = rows.hi;
      s.jmin = cols.lo;
      s.jmax = cols.hi;
      s.has_down = di > 1;
      s.has_up = di < p_rows;
      s.has_left = dj > 1;
      s.has_right = dj < p_cols;
      entries_.push_back(s);
    }
  }
}

DomainDecomposition decompose(int nx, int ny, int p_rows, int p_cols) {
  return DomainDecomposition(nx, ny, p_rows, p_cols);
}

InterfaceBuffer make_interface(const DomainDecomposition& decomp, int di,
                               int dj, Axis axis) {
  const bool ok = (axis == Axis::Column)
                      ? (di >= 1 && di < decomp.p_rows() && dj >= 1 &&
                         dj <= decomp.p_cols())
                      : (di >= 1 && di <= decomp.p_rows() && dj >= 1 &&
                         dj < decomp.p_cols());
  if (!ok) {
    throw ConfigError("interface (" + std::to_string(di) + "," +
                      std::to_string(dj) + ") has no far-side neighbor");
  }
  const Subdomain& owner = decomp.at(di, dj);
  InterfaceBuffer iface;
  iface.axis = axis;
  iface.di = di;
  iface.dj = dj;
  if (axis == Axis::Column) {
    iface.lo = owner.jmin;
    iface.hi = owner.jmax;
  } else {
    iface.lo = owner.imin;
    iface.hi = owner.imax;
  }
  iface.span.assign(static_cast<std::size_t>(2 * kGhost) * iface.extent(),
                    ConservedState{});
  return iface;
}

void fill_interface(const Grid2D& grid, const DomainDecomposition& decomp,
                    InterfaceBuffer& iface) {
  const Subdomain& owner = decomp.at(iface.di, iface.dj);
  const int extent = iface.extent();
  if (iface.axis == Axis::Column) {
    // Rows imax-1 .. imax+2 of columns jmin..jmax.
    for (int layer = 0; layer < 2 * kGhost; ++layer) {
      const int i = owner.imax - 1 + layer;
      for (int k = 0; k < extent; ++k) {
        iface.at(layer, k) = grid.cell(i, iface.lo + k);
      }
    }
  } else {
    // Columns jmax-1 .. jmax+2 of rows imin..imax.
    for (int layer = 0; layer < 2 * kGhost; ++layer) {
      const int j = owner.jmax - 1 + layer;
      for (int k = 0; k < extent; ++k) {
        iface.at(layer, k) = grid.cell(iface.lo + k, j);
      }
    }
  }
}

InterfaceBuffer extract_interface(const Grid2D& grid,
                                  const DomainDecomposition& decomp, int di,
                                  int dj, Axis axis) {
  InterfaceBuffer iface = make_interface(decomp, di, dj, axis);
  fill_interface(grid, decomp, iface);
  return iface;
}

namespace {

// Swizzles a grid-order cell into strip order for the given sweep axis.
ConservedState to_strip_order(const ConservedState& cell, Axis axis) {
  if (axis == Axis::Column) return cell;
  return {cell.rho, cell.mom_b, cell.mom_a, cell.ener};
}

}  // namespace

void assemble_strip_from_interfaces(const Grid2D& grid,
                                    const DomainDecomposition& decomp, int di,
                                    int dj, Axis axis, int index,
                                    const InterfaceBuffer* iface_lo,
                                    const InterfaceBuffer* iface_hi,
                                    StateStrip& strip) {
  const Subdomain& dom = decomp.at(di, dj);
  const int lo = (axis == Axis::Column) ? dom.imin : dom.jmin;
  const int hi = (axis == Axis::Column) ? dom.imax : dom.jmax;
  const bool has_lo = (axis == Axis::Column) ? dom.has_down : dom.has_left;
  const bool has_hi = (axis == Axis::Column) ? dom.has_up : dom.has_right;
  const int cross_lo = (axis == Axis::Column) ? dom.jmin : dom.imin;
  const int cross_hi = (axis == Axis::Column) ? dom.jmax : dom.imax;

  if (index < cross_lo || index > cross_hi) {
    throw ConfigError("strip " + std::to_string(index) +
                      " is not owned by subdomain (" + std::to_string(di) +
                      "," + std::to_string(dj) + ")");
  }
  if (has_lo && iface_lo == nullptr) {
    throw TaskGraphError("missing lower interface for subdomain (" +
                         std::to_string(di) + "," + std::to_string(dj) + ")");
  }
  if (has_hi && iface_hi == nullptr) {
    throw TaskGraphError("missing upper interface for subdomain (" +
                         std::to_string(di) + "," + std::to_string(dj) + ")");
  }

  strip.n = hi - lo + 1;
  strip.dx = (axis == Axis::Column) ? grid.dx() : grid.dy();
  strip.cells.resize(strip.size());

  const int k_off = index - cross_lo;  // position within the interface extent

  // Ghost cells below the subdomain: interface layers 0..1 are the lower
  // neighbor's last two cells (wall side falls back to grid ghosts).
  for (int g = 0; g < kGhost; ++g) {
    const int pos = lo - kGhost + g;
    const ConservedState cell =
        has_lo ? iface_lo->at(g, k_off)
               : ((axis == Axis::Column) ? grid.cell(pos, index)
                                         : grid.cell(index, pos));
    strip.cells[g] = to_strip_order(cell, axis);
  }

  // Interior straight from the grid: only this subdomain's own cells.
  for (int k = 0; k < strip.n; ++k) {
    const int pos = lo + k;
    const ConservedState cell = (axis == Axis::Column)
                                    ? grid.cell(pos, index)
                                    : grid.cell(index, pos);
    strip.cells[kGhost + k] = to_strip_order(cell, axis);
  }

  // Ghost cells above: interface layers 2..3 are the upper neighbor's first
  // two cells.
  for (int g = 0; g < kGhost; ++g) {
    const int pos = hi + 1 + g;
    const ConservedState cell =
        has_hi ? iface_hi->at(kGhost + g, k_off)
               : ((axis == Axis::Column) ? grid.cell(pos, index)
                                         : grid.cell(index, pos));
    strip.cells[kGhost + strip.n + g] = to_strip_order(cell, axis);
  }
}

}  // namespace hydro
