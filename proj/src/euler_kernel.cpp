#include "hydro/euler_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hydro/grid.hpp"

namespace hydro {

PrimitiveState cons_to_prim(const ConservedState& u, const GasModel& model) {
  if (!(u.rho > 0.0)) throw PositivityError("rho", "cons_to_prim input");
  const double vel_a = u.mom_a / u.rho;
  const double vel_b = u.mom_b / u.rho;
  const double pres =
      (model.gamma - 1.0) *
      (u.ener - 0.5 * u.rho * (vel_a * vel_a + vel_b * vel_b));
  if (!(pres > 0.0)) throw PositivityError("pres", "cons_to_prim input");
  return {u.rho, vel_a, vel_b, pres};
}

ConservedState prim_to_cons(const PrimitiveState& w, const GasModel& model) {
  if (!(w.rho > 0.0)) throw PositivityError("rho", "prim_to_cons input");
  if (!(w.pres > 0.0)) throw PositivityError("pres", "prim_to_cons input");
  const double ener = w.pres / (model.gamma - 1.0) +
                      0.5 * w.rho * (w.vel_a * w.vel_a + w.vel_b * w.vel_b);
  return {w.rho, w.rho * w.vel_a, w.rho * w.vel_b, ener};
}

double sound_speed(const PrimitiveState& w, const GasModel& model) {
  return std::sqrt(model.gamma * w.pres / w.rho);
}

FluxVector physical_flux(const PrimitiveState& w, const GasModel& model) {
  const double ener = w.pres / (model.gamma - 1.0) +
                      0.5 * w.rho * (w.vel_a * w.vel_a + w.vel_b * w.vel_b);
  return {w.rho * w.vel_a, w.rho * w.vel_a * w.vel_a + w.pres,
          w.rho * w.vel_a * w.vel_b, (ener + w.pres) * w.vel_a};
}

double slope_minmod(double w_left, double w_mid, double w_right) {
  const double dl = w_mid - w_left;
  const double dr = w_right - w_mid;
  if (dl > 0.0 && dr > 0.0) return std::min(dl, dr);
  if (dl < 0.0 && dr < 0.0) return std::max(dl, dr);
  return 0.0;
}

namespace {

ConservedState to_cons_unchecked(const PrimitiveState& w, double gamma) {
  const double ener = w.pres / (gamma - 1.0) +
                      0.5 * w.rho * (w.vel_a * w.vel_a + w.vel_b * w.vel_b);
  return {w.rho, w.rho * w.vel_a, w.rho * w.vel_b, ener};
}

}  // namespace

FluxVector riemann_flux(const PrimitiveState& wl, const PrimitiveState& wr,
                        const GasModel& model) {
  if (!(wl.rho > 0.0)) throw PositivityError("rho", "riemann left state");
  if (!(wl.pres > 0.0)) throw PositivityError("pres", "riemann left state");
  if (!(wr.rho > 0.0)) throw PositivityError("rho", "riemann right state");
  if (!(wr.pres > 0.0)) throw PositivityError("pres", "riemann right state");

  // Consistency: identical states must yield the exact physical flux F(U),
  // bit for bit.  The star-region algebra below only reproduces it up to
  // rounding (e.g. (u - c) - u != -c in floating point), so handle equality
  // explicitly.
  if (wl.rho == wr.rho && wl.vel_a == wr.vel_a && wl.vel_b == wr.vel_b &&
      wl.pres == wr.pres) {
    return physical_flux(wl, model);
  }

  const double cl = sound_speed(wl, model);
  const double cr = sound_speed(wr, model);
  const double sl = std::min(wl.vel_a - cl, wr.vel_a - cr);
  const double sr = std::max(wl.vel_a + cl, wr.vel_a + cr);

  if (sl >= 0.0) return physical_flux(wl, model);
  if (sr <= 0.0) return physical_flux(wr, model);

  const double ql = wl.rho * (sl - wl.vel_a);
  const double qr = wr.rho * (sr - wr.vel_a);
  const double s_star =
      (wr.pres - wl.pres + wl.vel_a * ql - wr.vel_a * qr) / (ql - qr);

  if (s_star >= 0.0) {
    const ConservedState ul = to_cons_unchecked(wl, model.gamma);
    const FluxVector fl = physical_flux(wl, model);
    const double factor = ql / (sl - s_star);
    const double e_star =
        ul.ener / wl.rho +
        (s_star - wl.vel_a) * (s_star + wl.pres / ql);
    return {fl.mass + sl * (factor - ul.rho),
            fl.mom_a + sl * (factor * s_star - ul.mom_a),
            fl.mom_b + sl * (factor * wl.vel_b - ul.mom_b),
            fl.ener + sl * (factor * e_star - ul.ener)};
  }
  const ConservedState ur = to_cons_unchecked(wr, model.gamma);
  const FluxVector fr = physical_flux(wr, model);
  const double factor = qr / (sr - s_star);
  const double e_star =
      ur.ener / wr.rho + (s_star - wr.vel_a) * (s_star + wr.pres / qr);
  return {fr.mass + sr * (factor - ur.rho),
          fr.mom_a + sr * (factor * s_star - ur.mom_a),
          fr.mom_b + sr * (factor * wr.vel_b - ur.mom_b),
          fr.ener + sr * (factor * e_star - ur.ener)};
}

StripFluxes sweep_strip(StateStrip& strip, double dt, const GasModel& model,
                        KernelScratch& scratch) {
  const int total = strip.size();
  const int n = strip.n;
  const double dtdx = dt / strip.dx;

  scratch.prim.resize(total);
  scratch.slope.resize(total);
  scratch.face_left.resize(total);
  scratch.face_right.resize(total);
  scratch.flux.resize(total);

  auto& w = scratch.prim;
  for (int k = 0; k < total; ++k) {
    const ConservedState& u = strip.cells[k];
    if (!(u.rho > 0.0)) {
      throw PositivityError("rho", "strip cell " + std::to_string(k - kGhost));
    }
    const double vel_a = u.mom_a / u.rho;
    const double vel_b = u.mom_b / u.rho;
    const double pres =
        (model.gamma - 1.0) *
        (u.ener - 0.5 * u.rho * (vel_a * vel_a + vel_b * vel_b));
    if (!(pres > 0.0)) {
      throw PositivityError("pres",
                            "strip cell " + std::to_string(k - kGhost));
    }
    w[k] = {u.rho, vel_a, vel_b, pres};
  }

  // Limited slopes and half-dt evolved face states for every cell that has
  // both neighbors.  If a reconstructed or evolved face state loses
  // positivity the cell falls back to first order, which keeps the update
  // well defined near strong blasts.
  for (int k = 1; k < total - 1; ++k) {
    PrimitiveState sl{
        slope_minmod(w[k - 1].rho, w[k].rho, w[k + 1].rho),
        slope_minmod(w[k - 1].vel_a, w[k].vel_a, w[k + 1].vel_a),
        slope_minmod(w[k - 1].vel_b, w[k].vel_b, w[k + 1].vel_b),
        slope_minmod(w[k - 1].pres, w[k].pres, w[k + 1].pres)};

    PrimitiveState wm{w[k].rho - 0.5 * sl.rho, w[k].vel_a - 0.5 * sl.vel_a,
                      w[k].vel_b - 0.5 * sl.vel_b,
                      w[k].pres - 0.5 * sl.pres};
    PrimitiveState wp{w[k].rho + 0.5 * sl.rho, w[k].vel_a + 0.5 * sl.vel_a,
                      w[k].vel_b + 0.5 * sl.vel_b,
                      w[k].pres + 0.5 * sl.pres};
    if (!(wm.rho > 0.0 && wm.pres > 0.0 && wp.rho > 0.0 && wp.pres > 0.0)) {
      wm = w[k];
      wp = w[k];
    }

    const FluxVector fm = physical_flux(wm, model);
    const FluxVector fp = physical_flux(wp, model);
    const double half = 0.5 * dtdx;
    const ConservedState um = to_cons_unchecked(wm, model.gamma);
    const ConservedState up = to_cons_unchecked(wp, model.gamma);
    const ConservedState dm{half * (fm.mass - fp.mass),
                            half * (fm.mom_a - fp.mom_a),
                            half * (fm.mom_b - fp.mom_b),
                            half * (fm.ener - fp.ener)};
    ConservedState el{um.rho + dm.rho, um.mom_a + dm.mom_a,
                      um.mom_b + dm.mom_b, um.ener + dm.ener};
    ConservedState er{up.rho + dm.rho, up.mom_a + dm.mom_a,
                      up.mom_b + dm.mom_b, up.ener + dm.ener};

    // Evolved faces back to primitives; drop to the unevolved cell state if
    // the half step overshot.
    auto face_prim = [&](const ConservedState& u) -> PrimitiveState {
      if (u.rho > 0.0) {
        const double va = u.mom_a / u.rho;
        const double vb = u.mom_b / u.rho;
        const double p = (model.gamma - 1.0) *
                         (u.ener - 0.5 * u.rho * (va * va + vb * vb));
        if (p > 0.0) return {u.rho, va, vb, p};
      }
      return w[k];
    };
    scratch.face_left[k] = face_prim(el);
    scratch.face_right[k] = face_prim(er);
  }

  // One Riemann problem per interior interface: right face of cell k
  // against left face of cell k+1.
  for (int k = 1; k <= n + 1; ++k) {
    scratch.flux[k] =
        riemann_flux(scratch.face_right[k], scratch.face_left[k + 1], model);
  }

  for (int k = kGhost; k < kGhost + n; ++k) {
    ConservedState& u = strip.cells[k];
    const FluxVector& fr = scratch.flux[k];
    const FluxVector& fl = scratch.flux[k - 1];
    u.rho -= dtdx * (fr.mass - fl.mass);
    u.mom_a -= dtdx * (fr.mom_a - fl.mom_a);
    u.mom_b -= dtdx * (fr.mom_b - fl.mom_b);
    u.ener -= dtdx * (fr.ener - fl.ener);

    if (!(u.rho > 0.0)) {
      throw PositivityError(
          "rho", "updated strip cell " + std::to_string(k - kGhost));
    }
    const double eint =
        u.ener - 0.5 * (u.mom_a * u.mom_a + u.mom_b * u.mom_b) / u.rho;
    if (!(eint > 0.0)) {
      throw PositivityError(
          "internal energy",
          "updated strip cell " + std::to_string(k - kGhost));
    }
  }

  return {scratch.flux[1], scratch.flux[n + 1]};
}

double cell_dt_limit(const ConservedState& u, double min_spacing,
                     const GasModel& model) {
  const PrimitiveState w = cons_to_prim(u, model);
  const double speed = std::max(std::abs(w.vel_a), std::abs(w.vel_b)) +
                       sound_speed(w, model);
  return min_spacing / speed;
}

double compute_dt(const Grid2D& grid, const GasModel& model) {
  const double spacing = std::min(grid.dx(), grid.dy());
  double limit = cell_dt_limit(grid.cell(1, 1), spacing, model);
  for (int i = 1; i <= grid.nx(); ++i) {
    for (int j = 1; j <= grid.ny(); ++j) {
      limit = std::min(limit, cell_dt_limit(grid.cell(i, j), spacing, model));
    }
  }
  return model.cfl * limit;
}

}  // namespace hydro
