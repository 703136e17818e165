#include "hydro/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

namespace hydro {

namespace {

// Fixed-shape pairwise reduction: halve until blocks of <= 8, sum those
// serially.  Deterministic for a given n, and far more accurate than a
// running sum on large grids.
double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += v[k];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double interior_sum(const Grid2D& grid, Var var) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(grid.nx()) * grid.ny());
  for (int i = 1; i <= grid.nx(); ++i) {
    for (int j = 1; j <= grid.ny(); ++j) {
      values.push_back(grid.at(var, i, j));
    }
  }
  return pairwise_sum(values.data(), values.size());
}

std::uint64_t to_bits(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  return bits;
}

}  // namespace

ConservationTotals conservation_totals(const Grid2D& grid) {
  const double volume = grid.dx() * grid.dy();
  return {volume * interior_sum(grid, Var::Rho),
          volume * interior_sum(grid, Var::MomX),
          volume * interior_sum(grid, Var::MomY),
          volume * interior_sum(grid, Var::Ener)};
}

GridChecksum grid_checksum(const Grid2D& grid) {
  GridChecksum sum;
  for (int v = 0; v < kNumVars; ++v) {
    sum.sums[v] = interior_sum(grid, static_cast<Var>(v));
  }

  std::uint64_t hash = 14695981039346656037ull;  // FNV-1a, 64-bit
  const auto mix = [&hash](double value) {
    std::uint64_t bits = to_bits(value);
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (bits >> (8 * byte)) & 0xffu;
      hash *= 1099511628211ull;
    }
  };
  for (int v = 0; v < kNumVars; ++v) {
    for (int i = 1; i <= grid.nx(); ++i) {
      for (int j = 1; j <= grid.ny(); ++j) {
        mix(grid.at(static_cast<Var>(v), i, j));
      }
    }
  }
  sum.digest = hash;
  return sum;
}

std::string format_digits(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_checksum(const GridChecksum& sum) {
  char digest[20];
  std::snprintf(digest, sizeof(digest), "%016llx",
                static_cast<unsigned long long>(sum.digest));
  std::string out = digest;
  out += "  rho=" + format_digits(sum.sums[0]);
  out += " mom_x=" + format_digits(sum.sums[1]);
  out += " mom_y=" + format_digits(sum.sums[2]);
  out += " ener=" + format_digits(sum.sums[3]);
  return out;
}

std::string BitwiseReport::describe() const {
  if (equal) return "grids bitwise equal";
  static const char* names[] = {"rho", "mom_x", "mom_y", "ener"};
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "first difference at %s(%d,%d): %016llx vs %016llx",
                names[static_cast<int>(var)], i, j,
                static_cast<unsigned long long>(bits_a),
                static_cast<unsigned long long>(bits_b));
  return buf;
}

BitwiseReport compare_bitwise(const Grid2D& a, const Grid2D& b) {
  BitwiseReport report{};
  report.equal = true;
  if (a.nx() != b.nx() || a.ny() != b.ny()) {
    report.equal = false;
    report.var = Var::Rho;
    report.i = report.j = 0;
    return report;
  }
  for (int v = 0; v < kNumVars; ++v) {
    for (int i = 1; i <= a.nx(); ++i) {
      for (int j = 1; j <= a.ny(); ++j) {
        const std::uint64_t ba = to_bits(a.at(static_cast<Var>(v), i, j));
        const std::uint64_t bb = to_bits(b.at(static_cast<Var>(v), i, j));
        if (ba != bb) {
          report.equal = false;
          report.var = static_cast<Var>(v);
          report.i = i;
          report.j = j;
          report.bits_a = ba;
          report.bits_b = bb;
          return report;
        }
      }
    }
  }
  return report;
}

ToleranceReport compare_tolerance(const Grid2D& a, const Grid2D& b) {
  double max_rel = 0.0;
  double abs_sum = 0.0;
  double scale_sum = 0.0;
  for (int v = 0; v < kNumVars; ++v) {
    for (int i = 1; i <= a.nx(); ++i) {
      for (int j = 1; j <= a.ny(); ++j) {
        const double va = a.at(static_cast<Var>(v), i, j);
        const double vb = b.at(static_cast<Var>(v), i, j);
        const double scale = std::max({std::fabs(va), std::fabs(vb), 1.0});
        max_rel = std::max(max_rel, std::fabs(va - vb) / scale);
        abs_sum += std::fabs(va - vb);
        scale_sum += scale;
      }
    }
  }
  return {max_rel, abs_sum / scale_sum};
}

double mirror_asymmetry(const Grid2D& grid) {
  const int nx = grid.nx();
  const int ny = grid.ny();
  double worst = 0.0;
  const auto check = [&worst](double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    worst = std::max(worst, std::fabs(a - b) / scale);
  };
  for (int i = 1; i <= nx; ++i) {
    for (int j = 1; j <= ny; ++j) {
      const ConservedState u = grid.cell(i, j);
      const ConservedState mx = grid.cell(nx + 1 - i, j);
      check(u.rho, mx.rho);
      check(u.mom_a, -mx.mom_a);
      check(u.mom_b, mx.mom_b);
      check(u.ener, mx.ener);
      const ConservedState my = grid.cell(i, ny + 1 - j);
      check(u.rho, my.rho);
      check(u.mom_a, my.mom_a);
      check(u.mom_b, -my.mom_b);
      check(u.ener, my.ener);
    }
  }
  return worst;
}

}  // namespace hydro
