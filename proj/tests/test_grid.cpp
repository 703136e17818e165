// Grid storage, reflective boundaries, and the strip READ/WRITE steps.

#include <cmath>
#include <cstring>
#include <random>

#include "doctest.h"
#include "hydro/euler_kernel.hpp"
#include "hydro/grid.hpp"

using namespace hydro;

namespace {

const GasModel kGas{};

bool bits_equal(double a, double b) {
  std::uint64_t ba, bb;
  std::memcpy(&ba, &a, sizeof a);
  std::memcpy(&bb, &b, sizeof b);
  return ba == bb;
}

Grid2D random_grid(int nx, int ny, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rho(0.2, 5.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  std::uniform_real_distribution<double> pres(0.1, 4.0);
  Grid2D grid(nx, ny, 1.0 / nx, 1.0 / ny);
  for (int i = -1; i <= nx + 2; ++i) {
    for (int j = -1; j <= ny + 2; ++j) {
      grid.set_cell(i, j,
                    prim_to_cons({rho(rng), vel(rng), vel(rng), pres(rng)},
                                 kGas));
    }
  }
  return grid;
}

bool grids_bitwise_equal(const Grid2D& a, const Grid2D& b) {
  for (int v = 0; v < kNumVars; ++v)
    for (int i = -1; i <= a.nx() + 2; ++i)
      for (int j = -1; j <= a.ny() + 2; ++j)
        if (!bits_equal(a.at(static_cast<Var>(v), i, j),
                        b.at(static_cast<Var>(v), i, j)))
          return false;
  return true;
}

}  // namespace

TEST_CASE("constructor rejects unusable shapes") {
  CHECK_THROWS_AS(Grid2D(3, 8, 0.1, 0.1), ConfigError);
  CHECK_THROWS_AS(Grid2D(8, 3, 0.1, 0.1), ConfigError);
  CHECK_THROWS_AS(Grid2D(8, 8, 0.0, 0.1), ConfigError);
  CHECK_THROWS_AS(Grid2D(8, 8, 0.1, -1.0), ConfigError);
}

TEST_CASE("reflective boundary mirrors the interior and flips the normal momentum") {
  auto grid = random_grid(6, 5, 3u);
  // Sentinels in the corner ghost blocks: apply_boundary must not touch them.
  grid.at(Var::Rho, 0, 0) = 777.0;
  grid.at(Var::Rho, -1, 6) = 888.0;
  grid.at(Var::Rho, 7, -1) = 999.0;
  grid.at(Var::Rho, 8, 7) = 555.0;

  apply_boundary(grid);

  for (int j = 1; j <= 5; ++j) {
    // Left wall: ghost layer 1 mirrors interior row 1, layer 2 mirrors row 2.
    CHECK(bits_equal(grid.at(Var::Rho, 0, j), grid.at(Var::Rho, 1, j)));
    CHECK(bits_equal(grid.at(Var::MomX, 0, j), -grid.at(Var::MomX, 1, j)));
    CHECK(bits_equal(grid.at(Var::MomY, 0, j), grid.at(Var::MomY, 1, j)));
    CHECK(bits_equal(grid.at(Var::Ener, 0, j), grid.at(Var::Ener, 1, j)));
    CHECK(bits_equal(grid.at(Var::Rho, -1, j), grid.at(Var::Rho, 2, j)));
    CHECK(bits_equal(grid.at(Var::MomX, -1, j), -grid.at(Var::MomX, 2, j)));
    // Right wall mirrors rows 6 and 5.
    CHECK(bits_equal(grid.at(Var::Rho, 7, j), grid.at(Var::Rho, 6, j)));
    CHECK(bits_equal(grid.at(Var::MomX, 7, j), -grid.at(Var::MomX, 6, j)));
    CHECK(bits_equal(grid.at(Var::Rho, 8, j), grid.at(Var::Rho, 5, j)));
    CHECK(bits_equal(grid.at(Var::MomX, 8, j), -grid.at(Var::MomX, 5, j)));
  }
  for (int i = 1; i <= 6; ++i) {
    // Bottom and top walls flip MomY instead.
    CHECK(bits_equal(grid.at(Var::Rho, i, 0), grid.at(Var::Rho, i, 1)));
    CHECK(bits_equal(grid.at(Var::MomY, i, 0), -grid.at(Var::MomY, i, 1)));
    CHECK(bits_equal(grid.at(Var::MomX, i, 0), grid.at(Var::MomX, i, 1)));
    CHECK(bits_equal(grid.at(Var::Rho, i, -1), grid.at(Var::Rho, i, 2)));
    CHECK(bits_equal(grid.at(Var::Rho, i, 6), grid.at(Var::Rho, i, 5)));
    CHECK(bits_equal(grid.at(Var::MomY, i, 6), -grid.at(Var::MomY, i, 5)));
    CHECK(bits_equal(grid.at(Var::Rho, i, 7), grid.at(Var::Rho, i, 4)));
    CHECK(bits_equal(grid.at(Var::MomY, i, 7), -grid.at(Var::MomY, i, 4)));
  }

  // Corners untouched.
  CHECK(grid.at(Var::Rho, 0, 0) == 777.0);
  CHECK(grid.at(Var::Rho, -1, 6) == 888.0);
  CHECK(grid.at(Var::Rho, 7, -1) == 999.0);
  CHECK(grid.at(Var::Rho, 8, 7) == 555.0);
}

TEST_CASE("apply_boundary is idempotent") {
  auto grid = random_grid(8, 8, 5u);
  apply_boundary(grid);
  auto once = grid;
  apply_boundary(grid);
  CHECK(grids_bitwise_equal(grid, once));
}

TEST_CASE("strip has two ghost cells per end") {
  auto grid = random_grid(8, 8, 7u);
  StateStrip strip;
  read_strip(grid, Axis::Column, 3, 1, 8, strip);
  CHECK(strip.n == 8);
  CHECK(strip.size() == 12);
  CHECK(strip.dx == grid.dx());
  read_strip(grid, Axis::Row, 2, 1, 8, strip);
  CHECK(strip.dx == grid.dy());
}

TEST_CASE("read_strip swizzles momentum to the sweep axis") {
  auto grid = random_grid(8, 6, 9u);
  StateStrip col;
  read_strip(grid, Axis::Column, 4, 1, 8, col);
  for (int k = 0; k < col.size(); ++k) {
    const int i = 1 + (k - kGhost);
    CHECK(bits_equal(col.cells[k].rho, grid.at(Var::Rho, i, 4)));
    CHECK(bits_equal(col.cells[k].mom_a, grid.at(Var::MomX, i, 4)));
    CHECK(bits_equal(col.cells[k].mom_b, grid.at(Var::MomY, i, 4)));
    CHECK(bits_equal(col.cells[k].ener, grid.at(Var::Ener, i, 4)));
  }
  StateStrip row;
  read_strip(grid, Axis::Row, 3, 1, 6, row);
  for (int k = 0; k < row.size(); ++k) {
    const int j = 1 + (k - kGhost);
    CHECK(bits_equal(row.cells[k].mom_a, grid.at(Var::MomY, 3, j)));
    CHECK(bits_equal(row.cells[k].mom_b, grid.at(Var::MomX, 3, j)));
  }
}

TEST_CASE("write_strip is the inverse of read_strip") {
  for (Axis axis : {Axis::Column, Axis::Row}) {
    auto grid = random_grid(8, 6, 13u);
    const auto before = grid;
    const int extent = axis == Axis::Column ? 8 : 6;
    StateStrip strip;
    read_strip(grid, axis, 2, 1, extent, strip);
    write_strip(grid, axis, 2, 1, extent, strip);
    CHECK(grids_bitwise_equal(grid, before));
  }
}

TEST_CASE("partial strips read and write the requested range only") {
  auto grid = random_grid(10, 10, 17u);
  const auto before = grid;
  StateStrip strip;
  read_strip(grid, Axis::Column, 5, 4, 7, strip);
  CHECK(strip.n == 4);
  // Ghosts come from cells 2,3 and 8,9.
  CHECK(bits_equal(strip.cells[0].rho, grid.at(Var::Rho, 2, 5)));
  CHECK(bits_equal(strip.cells[strip.size() - 1].rho,
                   grid.at(Var::Rho, 9, 5)));
  for (auto& c : strip.cells) c.rho *= 2.0;
  write_strip(grid, Axis::Column, 5, 4, 7, strip);
  for (int i = 1; i <= 10; ++i) {
    const double expected = (i >= 4 && i <= 7)
                                ? 2.0 * before.at(Var::Rho, i, 5)
                                : before.at(Var::Rho, i, 5);
    CHECK(bits_equal(grid.at(Var::Rho, i, 5), expected));
  }
}

TEST_CASE("out-of-range strip requests are rejected") {
  auto grid = random_grid(8, 8, 19u);
  StateStrip strip;
  CHECK_THROWS_AS(read_strip(grid, Axis::Column, 0, 1, 8, strip), ConfigError);
  CHECK_THROWS_AS(read_strip(grid, Axis::Column, 9, 1, 8, strip), ConfigError);
  CHECK_THROWS_AS(read_strip(grid, Axis::Column, 1, 0, 8, strip), ConfigError);
  CHECK_THROWS_AS(read_strip(grid, Axis::Column, 1, 1, 9, strip), ConfigError);
  read_strip(grid, Axis::Column, 1, 1, 8, strip);
  CHECK_THROWS_AS(write_strip(grid, Axis::Column, 1, 1, 7, strip),
                  ConfigError);
}

TEST_CASE("write_strip rejects non-positive states before touching the grid") {
  auto grid = random_grid(8, 8, 23u);
  const auto before = grid;
  StateStrip strip;
  read_strip(grid, Axis::Column, 4, 1, 8, strip);

  SUBCASE("negative density") {
    strip.cells[5].rho = -0.25;
    CHECK_THROWS_AS(write_strip(grid, Axis::Column, 4, 1, 8, strip),
                    PositivityError);
  }
  SUBCASE("negative internal energy") {
    // Large momentum at unchanged total energy drives e_int below zero.
    strip.cells[6].mom_a = 100.0;
    CHECK_THROWS_AS(write_strip(grid, Axis::Column, 4, 1, 8, strip),
                    PositivityError);
  }
  SUBCASE("ghost cells are exempt from the gate") {
    strip.cells[0].rho = -1.0;  // never written, so never checked
    write_strip(grid, Axis::Column, 4, 1, 8, strip);
  }
  // In the throwing subcases nothing may have been modified.
  CHECK(grids_bitwise_equal(grid, before));
}
